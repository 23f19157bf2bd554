"""Average of maximum-Shannon-entropy estimates over Haar-random future measurements."""

from __future__ import annotations

import numpy as np
import structlog

from qtomo.config import get_settings
from qtomo.config.constants import MIN_ENSEMBLE_BASES
from qtomo.domain.measurement import OrthonormalBasis, PriorData, born_probabilities
from qtomo.domain.sampling import haar_unitary
from qtomo.lib.ascent import OptimizerOptions
from qtomo.lib.exceptions import EnsembleTooSmall, EstimationError, InvalidEstimatorInput

from .estimate import Estimate, EstimateStatus
from .estimator import Estimator
from .estimator_tool import register_estimator
from .mse import mse

__all__ = ("EnsembleMseEstimator", "ensemble_mse")

logger = structlog.get_logger()

METHOD_TAG = "ensemble_mse"


def ensemble_mse(
    prior: PriorData,
    n_bases: int,
    rng: np.random.Generator,
    opts: OptimizerOptions | None = None,
) -> Estimate:
    """Mean of the MSE states over ``n_bases`` Haar-random future measurements.

    Each draw uses its own child stream of ``rng``. Draws whose future measurement
    is degenerate or whose optimization fails are skipped.

    Raises:
        EnsembleTooSmall: more than half of the draws were skipped.
    """
    if n_bases < MIN_ENSEMBLE_BASES:
        raise InvalidEstimatorInput(detail=f"ensemble needs at least {MIN_ENSEMBLE_BASES} bases, got {n_bases}")
    opts = opts or OptimizerOptions.from_settings()
    members: list[Estimate] = []
    for child in rng.spawn(n_bases):
        future = [OrthonormalBasis(kets=haar_unitary(child)) for _ in range(prior.m)]
        try:
            estimate = mse(prior, future, opts, method_tag="mse_random_basis")
        except EstimationError as exc:
            logger.debug("ensemble_member_skipped", reason=repr(exc))
            continue
        if estimate.status.is_failure:
            logger.debug("ensemble_member_skipped", reason=estimate.status.value)
            continue
        members.append(estimate)
    failures = n_bases - len(members)
    if failures > n_bases / 2:
        raise EnsembleTooSmall(detail=f"{failures} of {n_bases} ensemble members failed")
    rho = np.mean([member.rho for member in members], axis=0)
    point = np.concatenate([born_probabilities(rho, basis) for basis in prior.coordinate_bases])
    return Estimate.at_point(
        prior,
        point,
        objective_value=float(np.mean([member.objective_value for member in members])),
        iterations=sum(member.iterations for member in members),
        status=EstimateStatus.CONVERGED,
        method_tag=METHOD_TAG,
        members=tuple(members),
    )


@register_estimator(METHOD_TAG)
class EnsembleMseEstimator(Estimator):
    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        n_bases = self.options.get("n_bases") or get_settings().bench.ENSEMBLE_BASES
        return ensemble_mse(prior, n_bases, rng, self.opts)
