"""Maximum von Neumann entropy over the permissible region."""

from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

import numpy as np
import structlog
from scipy.special import entr

from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import RealVector
from qtomo.domain.region import FeasiblePoint, lift, simplex_directions
from qtomo.lib.ascent import AscentStep, OptimizerOptions, ascend

from .estimate import Estimate, EstimateStatus, fallback_estimate
from .estimator import Estimator
from .estimator_tool import register_estimator
from .start import interior_start

if TYPE_CHECKING:
    from qtomo.domain.qcore import ComplexMatrix3

__all__ = ("MvneEstimator", "mvne")

logger = structlog.get_logger()

METHOD_TAG = "mvne"


def _hermitian(matrix: ComplexMatrix3) -> ComplexMatrix3:
    return (matrix + matrix.conj().T) / 2


def entropy_objective(
    prior: PriorData,
) -> tuple[Callable[[RealVector], AscentStep], Callable[[RealVector], float]]:
    """Von Neumann entropy in reduced coordinates and its gradient ``-sum_k ln l_k <E_k|G_j|E_k>``.

    Points with a negative eigenvalue are refused with ``-inf``.
    """
    directions = simplex_directions(prior.m)
    generators = prior.chart.generators

    def evaluate(u: RealVector) -> AscentStep:
        values, vectors = np.linalg.eigh(_hermitian(prior.chart(lift(u))))
        if values[0] < 0:
            return AscentStep(value=-np.inf, gradient=np.zeros(directions.shape[1]))
        weights = np.einsum("ak,jab,bk->jk", vectors.conj(), generators, vectors).real
        gradient_p = -(weights @ np.log(np.maximum(values, np.finfo(float).tiny)))
        return AscentStep(value=float(np.sum(entr(values))), gradient=gradient_p @ directions)

    def objective(u: RealVector) -> float:
        values = np.linalg.eigvalsh(_hermitian(prior.chart(lift(u))))
        return -np.inf if values[0] < 0 else float(np.sum(entr(values)))

    return evaluate, objective


def mvne(prior: PriorData, opts: OptimizerOptions | None = None) -> Estimate:
    """Gradient ascent on the von Neumann entropy from a strictly feasible start.

    The maximum is interior, so no barrier is used. A region without interior
    yields its largest-minimum-eigenvalue point with status ``FallbackMaxMinEig``.
    """
    opts = opts or OptimizerOptions.from_settings()
    start = interior_start(prior, opts)
    if isinstance(start, FeasiblePoint):
        logger.info("estimator_fallback", method=METHOD_TAG, min_eig=start.min_eig)
        return fallback_estimate(prior, start, METHOD_TAG)
    evaluate, objective = entropy_objective(prior)
    result = ascend(
        evaluate,
        objective,
        start.u,
        alpha=opts.armijo_alpha,
        beta=opts.armijo_beta,
        grad_tol=opts.grad_tol,
        max_iters=opts.max_iters,
        accept_grad_tol=opts.accept_grad_tol,
        value_rtol=opts.value_rtol,
    )
    status = EstimateStatus.CONVERGED if result.converged or result.stalled else EstimateStatus.FAILED
    return Estimate.at_point(
        prior,
        lift(result.x),
        objective_value=result.value,
        iterations=result.iterations,
        status=status,
        method_tag=METHOD_TAG,
    )


@register_estimator(METHOD_TAG)
class MvneEstimator(Estimator):
    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        return mvne(prior, self.opts)
