"""Estimators drawn from uniform samples of the permissible region."""

from __future__ import annotations

import numpy as np

from qtomo.config import get_settings
from qtomo.config.constants import MIN_COM_SAMPLES
from qtomo.domain.measurement import PriorData
from qtomo.domain.region import sample_region
from qtomo.lib.exceptions import InvalidEstimatorInput

from .estimate import Estimate, EstimateStatus
from .estimator import Estimator
from .estimator_tool import register_estimator

__all__ = ("ComEstimator", "RandomEstimator", "com", "random_estimator")


def com(prior: PriorData, n_samples: int, rng: np.random.Generator) -> Estimate:
    """Center of mass of ``n_samples`` uniform region draws, with its standard error per coordinate."""
    if n_samples < MIN_COM_SAMPLES:
        raise InvalidEstimatorInput(detail=f"center of mass needs at least {MIN_COM_SAMPLES} samples, got {n_samples}")
    sample = sample_region(prior, n_samples, rng)
    return Estimate.at_point(
        prior,
        sample.points.mean(axis=0),
        objective_value=float("nan"),
        iterations=0,
        status=EstimateStatus.CONVERGED,
        method_tag="com",
        std_error=sample.points.std(axis=0, ddof=1) / np.sqrt(n_samples),
    )


def random_estimator(prior: PriorData, rng: np.random.Generator) -> Estimate:
    """One uniform draw from the region."""
    sample = sample_region(prior, 1, rng)
    return Estimate.at_point(
        prior,
        sample.points[0],
        objective_value=float("nan"),
        iterations=0,
        status=EstimateStatus.CONVERGED,
        method_tag="random",
    )


@register_estimator("com")
class ComEstimator(Estimator):
    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        n_samples = self.options.get("n_samples") or get_settings().bench.COM_SAMPLES
        return com(prior, n_samples, rng)


@register_estimator("random")
class RandomEstimator(Estimator):
    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        return random_estimator(prior, rng)
