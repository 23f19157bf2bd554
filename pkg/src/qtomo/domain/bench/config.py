"""Benchmark scenario configuration.

A scenario starts from the ``BENCH_`` settings, command line flags replace
fields, and a JSON scenario file replaces fields again.
"""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import Any

import msgspec

from qtomo.config import get_settings
from qtomo.config.constants import MIN_AREA_SAMPLES, MIN_COM_SAMPLES, MIN_ENSEMBLE_BASES
from qtomo.domain.sampling import SamplerSpec, sampler_exists
from qtomo.lib.exceptions import ConfigError, SamplerError
from qtomo.lib.serialization import read_json

__all__ = (
    "DISTANCE_NAMES",
    "ESTIMATOR_NAMES",
    "ScenarioConfig",
    "load_scenario_overrides",
)

ESTIMATOR_NAMES = ("mvne", "mse_mub", "mse_random_basis", "com", "random", "ensemble_mse")
DISTANCE_NAMES = ("hs", "fidelity", "relative_entropy", "ratio_sqrt_area")
DEFAULT_ESTIMATORS = ("mvne", "mse_mub", "mse_random_basis", "com", "random")
DEFAULT_DISTANCES = ("hs", "fidelity", "relative_entropy")


class ScenarioConfig(msgspec.Struct, kw_only=True, forbid_unknown_fields=True):
    seed: int = 0
    trials: int = 10_000
    sampler: str = "hs"
    dirichlet_alpha: list[float] = msgspec.field(default_factory=lambda: [1.0, 1.0, 1.0])
    purity_band: list[float] | None = None
    unmeasured_count: int = 1
    estimators: list[str] = msgspec.field(default_factory=lambda: list(DEFAULT_ESTIMATORS))
    distances: list[str] = msgspec.field(default_factory=lambda: list(DEFAULT_DISTANCES))
    com_samples: int = 10_000
    area_samples: int = 20_000
    ensemble_bases: int = 20
    workers: int = 1
    out_dir: str = "results"
    trials_csv: str = "trials.csv"
    summary_json: str = "summary.json"

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ConfigError(detail=f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.trials < 1:
            raise ConfigError(detail=f"trials must be at least 1, got {self.trials}")
        if self.unmeasured_count not in {1, 2}:
            raise ConfigError(detail=f"unmeasured_count must be 1 or 2, got {self.unmeasured_count}")
        if not self.estimators:
            raise ConfigError(detail="at least one estimator is required")
        if unknown := sorted(set(self.estimators) - set(ESTIMATOR_NAMES)):
            raise ConfigError(detail=f"unknown estimators {unknown}, choose from {list(ESTIMATOR_NAMES)}")
        if unknown := sorted(set(self.distances) - set(DISTANCE_NAMES)):
            raise ConfigError(detail=f"unknown distances {unknown}, choose from {list(DISTANCE_NAMES)}")
        if not sampler_exists(self.sampler):
            raise ConfigError(detail=f"unknown sampler '{self.sampler}'")
        if self.com_samples < MIN_COM_SAMPLES:
            raise ConfigError(detail=f"com_samples must be at least {MIN_COM_SAMPLES}")
        if self.area_samples < MIN_AREA_SAMPLES:
            raise ConfigError(detail=f"area_samples must be at least {MIN_AREA_SAMPLES}")
        if self.ensemble_bases < MIN_ENSEMBLE_BASES:
            raise ConfigError(detail=f"ensemble_bases must be at least {MIN_ENSEMBLE_BASES}")
        if self.workers < 1:
            raise ConfigError(detail=f"workers must be at least 1, got {self.workers}")
        if self.purity_band is not None and len(self.purity_band) != 2:
            raise ConfigError(detail=f"purity band needs two numbers, got {self.purity_band}")
        try:
            self.sampler_spec  # noqa: B018
        except SamplerError as exc:
            raise ConfigError(detail=exc.detail) from exc

    @classmethod
    def from_settings(cls, **overrides: Any) -> ScenarioConfig:
        bench = get_settings().bench
        values: dict[str, Any] = {
            "trials": bench.TRIALS,
            "com_samples": bench.COM_SAMPLES,
            "area_samples": bench.AREA_SAMPLES,
            "ensemble_bases": bench.ENSEMBLE_BASES,
            "workers": bench.WORKERS,
            "out_dir": str(bench.OUT_DIR),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.convert(values)

    @classmethod
    def convert(cls, values: Mapping[str, Any]) -> ScenarioConfig:
        try:
            return msgspec.convert(dict(values), cls)
        except msgspec.ValidationError as exc:
            raise ConfigError(detail=f"Invalid scenario: {exc}") from exc

    def merge(self, overrides: Mapping[str, Any]) -> ScenarioConfig:
        """A copy with the fields of ``overrides`` replaced."""
        return self.convert({**msgspec.structs.asdict(self), **overrides})

    @property
    def sampler_spec(self) -> SamplerSpec:
        return SamplerSpec(
            kind=self.sampler,
            dirichlet_alpha=tuple(self.dirichlet_alpha),  # type: ignore[arg-type]
            purity_band=None if self.purity_band is None else (self.purity_band[0], self.purity_band[1]),
        )

    @property
    def trials_path(self) -> Path:
        return Path(self.out_dir) / self.trials_csv

    @property
    def summary_path(self) -> Path:
        return Path(self.out_dir) / self.summary_json

    @property
    def needs_area(self) -> bool:
        return "ratio_sqrt_area" in self.distances

    def effective_estimators(self) -> list[str]:
        """Estimators run per trial; a random fixed basis is not used with two unmeasured bases."""
        if self.unmeasured_count == 2:
            return [name for name in self.estimators if name != "mse_random_basis"]
        return list(self.estimators)

    def to_dict(self) -> dict[str, Any]:
        return msgspec.structs.asdict(self)


def load_scenario_overrides(path: Path) -> dict[str, Any]:
    """Fields of a JSON scenario file, to be merged over the flags."""
    data = read_json(path, dict[str, Any])
    if unknown := sorted(set(data) - set(ScenarioConfig.__struct_fields__)):
        raise ConfigError(detail=f"unknown scenario fields {unknown} in {path}")
    return data
