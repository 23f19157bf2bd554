"""One benchmark trial: sample a state, measure, estimate, score."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import numpy as np
import structlog
from structlog.contextvars import bound_contextvars

from qtomo.domain.estimators import Estimate, Estimator, OptimizerOptions
from qtomo.domain.measurement import OrthonormalBasis, PriorData
from qtomo.domain.metrics import angular_distance, distance_report, region_area
from qtomo.domain.qcore import DensityMatrix
from qtomo.domain.sampling import StateSampler, haar_unitary, purity
from qtomo.lib.exceptions import EstimationError

from .config import ScenarioConfig

__all__ = (
    "TrialDistances",
    "TrialRecord",
    "TrialStatus",
    "fixed_random_bases",
    "run_trial",
    "trial_rng",
    "unmeasured_bases",
)

logger = structlog.get_logger()

NAN = float("nan")


class TrialStatus(StrEnum):
    OK = "Ok"
    ALL_NAN = "AllNaN"


@dataclass(frozen=True, kw_only=True)
class TrialDistances:
    d_hs: float = NAN
    fidelity: float = NAN
    d_relent: float = NAN
    d_angular: float = NAN
    ratio: float = NAN


@dataclass(frozen=True, kw_only=True)
class TrialRecord:
    trial_id: int
    sampler: str
    true_purity: float
    region_area: float | None
    status: TrialStatus
    distances: dict[str, TrialDistances] = field(default_factory=dict)
    """Per estimator, in configured order; all ``nan`` when the trial is ``AllNaN``."""

    def rows(self) -> list[dict[str, Any]]:
        return [
            {
                "trial_id": self.trial_id,
                "sampler": self.sampler,
                "true_purity": self.true_purity,
                "region_area": "" if self.region_area is None else self.region_area,
                "estimator": name,
                "status": self.status.value,
                "d_hs": scores.d_hs,
                "fidelity": scores.fidelity,
                "d_relent": scores.d_relent,
                "d_angular": scores.d_angular,
                "ratio": scores.ratio,
            }
            for name, scores in self.distances.items()
        ]


def trial_rng(seed: int, trial_id: int) -> np.random.Generator:
    """Stream of one trial, independent of the order trials are run in."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(0, trial_id)))


def fixed_random_bases(seed: int, m: int) -> list[OrthonormalBasis]:
    """Haar-random future bases shared by every trial of a run."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(1,)))
    return [OrthonormalBasis(kets=haar_unitary(rng)) for _ in range(m)]


def unmeasured_bases(count: int) -> tuple[int, ...]:
    """The computational basis, then the first Fourier basis."""
    return tuple(range(count))


def _score(
    name: str,
    config: ScenarioConfig,
    rho: DensityMatrix,
    prior: PriorData,
    estimate: Estimate,
    area: float | None,
) -> TrialDistances:
    report = distance_report(rho, estimate.state())
    angle = angular_distance(prior.true_coordinates(rho), estimate.point)
    wanted = set(config.distances)
    if report.support_mismatch:
        logger.debug("relative_entropy_support_mismatch", estimator=name)
    return TrialDistances(
        d_hs=report.hs if "hs" in wanted else NAN,
        fidelity=report.fidelity if "fidelity" in wanted else NAN,
        d_relent=report.relative_entropy if "relative_entropy" in wanted else NAN,
        d_angular=angle,
        ratio=angle / math.sqrt(area) if area else NAN,
    )


def run_trial(
    config: ScenarioConfig,
    trial_id: int,
    fixed_bases: list[OrthonormalBasis] | None = None,
) -> TrialRecord:
    """Run every configured estimator on one sampled state.

    A failure of any estimator marks the whole trial ``AllNaN``.
    """
    names = config.effective_estimators()
    rng = trial_rng(config.seed, trial_id)
    state_rng, area_rng, *estimator_rngs = rng.spawn(2 + len(names))
    rho = StateSampler.get_sampler(config.sampler_spec).sample(state_rng)
    prior = PriorData.from_state(rho, unmeasured_bases(config.unmeasured_count))
    area = region_area(prior, config.area_samples, area_rng).area if config.needs_area else None
    opts = OptimizerOptions.from_settings()
    kwargs: dict[str, dict[str, Any]] = {
        "mse_random_basis": {"future_bases": fixed_bases or fixed_random_bases(config.seed, prior.m)},
        "com": {"n_samples": config.com_samples},
        "ensemble_mse": {"n_bases": config.ensemble_bases},
    }
    estimates: dict[str, Estimate] = {}
    with bound_contextvars(trial_id=trial_id):
        for name, estimator_rng in zip(names, estimator_rngs, strict=True):
            estimator = Estimator.get_estimator(name, opts=opts, **kwargs.get(name, {}))
            try:
                estimate = estimator.estimate(prior, estimator_rng)
            except EstimationError as exc:
                logger.info("estimator_failed", estimator=name, error=repr(exc))
                break
            if estimate.status.is_failure:
                logger.info("estimator_failed", estimator=name, status=estimate.status.value)
                break
            estimates[name] = estimate
        else:
            return TrialRecord(
                trial_id=trial_id,
                sampler=config.sampler,
                true_purity=purity(rho),
                region_area=area,
                status=TrialStatus.OK,
                distances={name: _score(name, config, rho, prior, est, area) for name, est in estimates.items()},
            )
        logger.info("trial_all_nan", estimators=names)
    return TrialRecord(
        trial_id=trial_id,
        sampler=config.sampler,
        true_purity=purity(rho),
        region_area=area,
        status=TrialStatus.ALL_NAN,
        distances={name: TrialDistances() for name in names},
    )
