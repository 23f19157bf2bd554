"""Ascent on the minimum eigenvalue: reaching the permissible region and its most interior point."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import structlog
from scipy import optimize

from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import RealVector
from qtomo.lib.ascent import AscentStep, OptimizerOptions, ascend
from qtomo.lib.exceptions import InfeasibleRegionSuspected

from .coords import ReducedCoords, lift
from .field import grad_min_eig, min_eig_field

__all__ = (
    "FeasiblePoint",
    "find_feasible",
    "maximize_min_eig",
)

logger = structlog.get_logger()


@dataclass(frozen=True, kw_only=True)
class FeasiblePoint:
    point: RealVector
    u: RealVector
    min_eig: float
    iterations: int
    converged: bool = True


def _min_eig_step(prior: PriorData) -> tuple[Callable[[RealVector], AscentStep], Callable[[RealVector], float]]:
    def evaluate(u: RealVector) -> AscentStep:
        result = grad_min_eig(u, prior)
        return AscentStep(value=result.value, gradient=result.gradient)

    def objective(u: RealVector) -> float:
        return min_eig_field(lift(u), prior)

    return evaluate, objective


def find_feasible(
    prior: PriorData,
    start: ReducedCoords | None = None,
    opts: OptimizerOptions | None = None,
) -> FeasiblePoint:
    """Gradient ascent on ``lambda_min`` from ``start`` (default the simplex center) until it is non-negative.

    Raises:
        InfeasibleRegionSuspected: the iterates stop short of the region.
    """
    opts = opts or OptimizerOptions.from_settings()
    start = start or ReducedCoords.center(prior.m)
    evaluate, objective = _min_eig_step(prior)
    result = ascend(
        evaluate,
        objective,
        start.u,
        alpha=opts.armijo_alpha,
        beta=opts.armijo_beta,
        grad_tol=opts.grad_tol,
        max_iters=opts.max_iters,
        stop_when=lambda _, step: step.value >= 0.0,
    )
    if result.value < 0.0:
        logger.debug("feasible_point_not_found", min_eig=result.value, iterations=result.iterations)
        raise InfeasibleRegionSuspected(
            detail=f"minimum eigenvalue stopped at {result.value:.3e} after {result.iterations} iterations"
        )
    return FeasiblePoint(point=lift(result.x), u=result.x, min_eig=result.value, iterations=result.iterations)


def maximize_min_eig(
    prior: PriorData,
    opts: OptimizerOptions | None = None,
    start: ReducedCoords | None = None,
) -> FeasiblePoint:
    """The point of largest ``lambda_min``, negative when the region is empty.

    Gradient ascent stalls at the kinks of ``lambda_min``, so its end point is
    polished with Nelder-Mead.
    """
    opts = opts or OptimizerOptions.from_settings()
    start = start or ReducedCoords.center(prior.m)
    evaluate, objective = _min_eig_step(prior)
    result = ascend(
        evaluate,
        objective,
        start.u,
        alpha=opts.armijo_alpha,
        beta=opts.armijo_beta,
        grad_tol=opts.grad_tol,
        max_iters=opts.max_iters,
    )
    polished = optimize.minimize(
        lambda u: -objective(u),
        result.x,
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 2000 * prior.m},
    )
    u = np.asarray(polished.x if -polished.fun >= result.value else result.x, dtype=np.float64)
    value = max(-float(polished.fun), result.value)
    return FeasiblePoint(
        point=lift(u),
        u=u,
        min_eig=value,
        iterations=result.iterations + int(polished.nit),
        converged=result.converged or result.stalled,
    )
