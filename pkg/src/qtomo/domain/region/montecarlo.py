"""Uniform sampling of the permissible region.

Uniform simplex proposals are accepted by a Cholesky test. When the region is
so small that fewer than ``IMPORTANCE_TRIGGER`` of the pilot proposals land in
it, proposals come from a Gaussian fitted to points of the region instead, and
the accepted points are resampled with weights ``1/pdf`` so that they are
uniform again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
import structlog
from scipy import stats

from qtomo.config import get_settings
from qtomo.config.base import RegionSettings
from qtomo.config.constants import DIM
from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import RealVector
from qtomo.lib.exceptions import InvalidEstimatorInput, RegionTooSmall

from .boundary import bisect_rays, simplex_exit
from .coords import lift, reduce, simplex_directions
from .field import membership_batch
from .search import maximize_min_eig

__all__ = (
    "RegionSample",
    "sample_region",
    "uniform_simplex_points",
)

logger = structlog.get_logger()

N_TRIAL_RAYS = 256
COVARIANCE_INFLATION = 1.5**2
POOL_FACTOR = 5


@dataclass(frozen=True, kw_only=True)
class RegionSample:
    points: RealVector
    """``(n, 3m)`` points of the region."""
    acceptance_rate: float
    strategy: Literal["rejection", "importance"]
    n_proposals: int


def uniform_simplex_points(m: int, n: int, rng: np.random.Generator) -> RealVector:
    """``n`` uniform draws from the product of ``m`` probability simplexes, as ``(n, 3m)`` rows."""
    return rng.dirichlet(np.ones(DIM), size=(n, m)).reshape(n, DIM * m)


def _trial_points(prior: PriorData, accepted: RealVector, rng: np.random.Generator) -> RealVector:
    """Points spread over the region.

    Accepted pilot points when there are enough, otherwise points along random rays from its most interior point.
    """
    if accepted.shape[0] > 4 * prior.n_coords:
        return accepted
    best = maximize_min_eig(prior)
    if best.min_eig < 0.0:
        raise RegionTooSmall(detail=f"no feasible point, largest minimum eigenvalue {best.min_eig:.3e}")
    u_directions = rng.standard_normal((N_TRIAL_RAYS, 2 * prior.m))
    u_directions /= np.linalg.norm(u_directions, axis=1, keepdims=True)
    directions = u_directions @ simplex_directions(prior.m).T
    mu, _ = bisect_rays(prior, best.point, directions, simplex_exit(best.point, directions))
    if not np.any(mu > 0):
        raise RegionTooSmall(detail="region has no measurable interior")
    return best.point + (rng.uniform(size=N_TRIAL_RAYS) * mu)[:, None] * directions


def _importance_sample(
    prior: PriorData,
    n: int,
    rng: np.random.Generator,
    accepted: RealVector,
    proposals_used: int,
    settings: RegionSettings,
) -> RegionSample:
    trial_u = reduce(_trial_points(prior, accepted, rng))
    dim = trial_u.shape[1]
    covariance = np.cov(trial_u, rowvar=False) * COVARIANCE_INFLATION + 1e-14 * np.eye(dim)
    proposal = stats.multivariate_normal(mean=trial_u.mean(axis=0), cov=covariance, allow_singular=True)
    logger.info("importance_sampling_fallback", pilot_accepted=int(accepted.shape[0]), proposals=proposals_used)

    pool: list[RealVector] = []
    weights: list[RealVector] = []
    n_pool, gaussian_proposals = 0, 0
    while n_pool < POOL_FACTOR * n:
        if proposals_used >= settings.REJECTION_BUDGET:
            if n_pool >= n:
                break
            raise RegionTooSmall(detail=f"importance sampling found {n_pool} of {n} points within the budget")
        size = min(settings.CHUNK_SIZE, settings.REJECTION_BUDGET - proposals_used)
        u = np.atleast_2d(proposal.rvs(size=size, random_state=rng)).reshape(size, dim)
        proposals_used += size
        gaussian_proposals += size
        points = lift(u)
        inside = membership_batch(points, prior)
        if not inside.any():
            continue
        pool.append(points[inside])
        weights.append(1.0 / np.atleast_1d(proposal.pdf(u[inside])))
        n_pool += int(inside.sum())
    all_points = np.concatenate(pool)
    all_weights = np.concatenate(weights)
    chosen = rng.choice(all_points.shape[0], size=n, replace=False, p=all_weights / all_weights.sum())
    return RegionSample(
        points=all_points[chosen],
        acceptance_rate=n_pool / gaussian_proposals,
        strategy="importance",
        n_proposals=proposals_used,
    )


def sample_region(
    prior: PriorData,
    n: int,
    rng: np.random.Generator,
    settings: RegionSettings | None = None,
) -> RegionSample:
    """``n`` uniform draws from the permissible region.

    Raises:
        RegionTooSmall: fewer than ``n`` points were found within the proposal budget.
    """
    if n < 1:
        raise InvalidEstimatorInput(detail=f"sample count must be at least 1, got {n}")
    settings = settings or get_settings().region
    accepted: list[RealVector] = []
    n_accepted, proposed = 0, 0
    while n_accepted < n:
        if proposed >= settings.REJECTION_BUDGET:
            raise RegionTooSmall(detail=f"rejection sampling found {n_accepted} of {n} points within the budget")
        if proposed >= settings.PILOT_PROPOSALS and n_accepted / proposed < settings.IMPORTANCE_TRIGGER:
            found = np.concatenate(accepted) if accepted else np.empty((0, prior.n_coords))
            return _importance_sample(prior, n, rng, found, proposed, settings)
        size = min(settings.CHUNK_SIZE, settings.REJECTION_BUDGET - proposed)
        points = uniform_simplex_points(prior.m, size, rng)
        inside = membership_batch(points, prior)
        accepted.append(points[inside])
        n_accepted += int(inside.sum())
        proposed += size
    return RegionSample(
        points=np.concatenate(accepted)[:n],
        acceptance_rate=n_accepted / proposed,
        strategy="rejection",
        n_proposals=proposed,
    )
