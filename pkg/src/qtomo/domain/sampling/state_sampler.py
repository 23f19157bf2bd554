from __future__ import annotations

import abc
from dataclasses import dataclass

import numpy as np

from qtomo.config.constants import DIM, PURITY_BAND_ATTEMPTS
from qtomo.domain.qcore import DensityMatrix
from qtomo.lib.exceptions import SamplerError, UnknownComponentError

from .sampler_config import sampler_mapping
from .states import purity

__all__ = ("SamplerSpec", "StateSampler")


@dataclass(frozen=True, kw_only=True)
class SamplerSpec:
    kind: str
    dirichlet_alpha: tuple[float, float, float] = (1.0, 1.0, 1.0)
    purity_band: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        if len(self.dirichlet_alpha) != DIM or any(a <= 0 for a in self.dirichlet_alpha):
            raise SamplerError(detail=f"dirichlet alpha must be {DIM} positive numbers, got {self.dirichlet_alpha}")
        if self.purity_band is not None:
            lo, hi = self.purity_band
            if not 1 / DIM - 1e-12 <= lo <= hi <= 1.0:
                raise SamplerError(detail=f"purity band must satisfy 1/3 <= lo <= hi <= 1, got {self.purity_band}")

    @classmethod
    def highly_mixed(cls, kind: str = "hs") -> SamplerSpec:
        """States of purity below one half."""
        return cls(kind=kind, purity_band=(1 / DIM, 0.5))


class StateSampler(abc.ABC):
    name: str = ""

    def __init__(self, spec: SamplerSpec) -> None:
        self.spec = spec

    @staticmethod
    def get_sampler(spec: SamplerSpec) -> StateSampler:
        if spec.kind not in sampler_mapping:
            raise UnknownComponentError(detail=f"Sampler '{spec.kind}' is not registered")
        return sampler_mapping[spec.kind](spec)

    @abc.abstractmethod
    def draw(self, rng: np.random.Generator) -> DensityMatrix:
        """One state, ignoring the purity band."""

    def sample(self, rng: np.random.Generator) -> DensityMatrix:
        """One state with purity inside the band, drawn by rejection."""
        if self.spec.purity_band is None:
            return self.draw(rng)
        lo, hi = self.spec.purity_band
        for _ in range(PURITY_BAND_ATTEMPTS):
            rho = self.draw(rng)
            if lo <= purity(rho) <= hi:
                return rho
        raise SamplerError(
            detail=f"no '{self.name}' state with purity in [{lo}, {hi}] after {PURITY_BAND_ATTEMPTS} draws",
        )

    def sample_many(self, n: int, rng: np.random.Generator) -> list[DensityMatrix]:
        return [self.sample(rng) for _ in range(n)]
