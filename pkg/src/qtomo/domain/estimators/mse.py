"""Maximum Shannon entropy of the future-measurement probabilities over the permissible region.

When the uniform distribution is not permissible the maximum lies on the
boundary, and the ascent runs on ``H(q) + t ln lambda_min(q)``: the log barrier
keeps every iterate inside the region and ``t`` is driven down to the
configured weight.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np
import structlog
from scipy.special import entr

from qtomo.domain.measurement import OrthonormalBasis, PriorData, future_transform
from qtomo.domain.qcore import RealVector
from qtomo.domain.region import FeasiblePoint, grad_min_eig, lift, membership, min_eig_field, simplex_directions
from qtomo.domain.sampling import haar_unitary
from qtomo.lib.ascent import AscentResult, AscentStep, OptimizerOptions, ascend
from qtomo.lib.exceptions import DegenerateFutureMeasurement

from .estimate import Estimate, EstimateStatus, fallback_estimate
from .estimator import Estimator
from .estimator_tool import register_estimator
from .start import interior_start

__all__ = ("MseMubEstimator", "MseRandomBasisEstimator", "barrier_objective", "mse")

logger = structlog.get_logger()


def barrier_objective(
    prior: PriorData,
    t: float,
) -> tuple[Callable[[RealVector], AscentStep], Callable[[RealVector], float]]:
    """Shannon entropy plus ``t ln lambda_min`` in reduced coordinates.

    The Hessian is the exact Shannon Hessian plus the barrier dyadic ``-t g g' / lambda^2``.
    """
    directions = simplex_directions(prior.m)

    def objective(u: RealVector) -> float:
        q = lift(u)
        if np.any(q <= 0):
            return -np.inf
        lam = min_eig_field(q, prior)
        if lam <= 0:
            return -np.inf
        return float(np.sum(entr(q)) + t * np.log(lam))

    def evaluate(u: RealVector) -> AscentStep:
        q = lift(u)
        field = grad_min_eig(u, prior)
        if np.any(q <= 0) or field.value <= 0:
            return AscentStep(value=-np.inf, gradient=np.zeros(directions.shape[1]))
        entropy_gradient = -np.log(q) @ directions
        entropy_hessian = -(directions.T / q) @ directions
        barrier_gradient = t * field.gradient / field.value
        barrier_hessian = -t * np.outer(field.gradient, field.gradient) / field.value**2
        return AscentStep(
            value=float(np.sum(entr(q)) + t * np.log(field.value)),
            gradient=entropy_gradient + barrier_gradient,
            hessian=entropy_hessian + barrier_hessian,
        )

    return evaluate, objective


def _future_prior(
    prior: PriorData,
    future: Sequence[OrthonormalBasis] | None,
) -> tuple[PriorData, Callable[[RealVector], RealVector]]:
    """The prior in future-basis coordinates and the map back to the prior's own coordinates."""
    if future is None:
        return prior, lambda q: q
    amap = future_transform(prior, future)
    if amap.degenerate:
        raise DegenerateFutureMeasurement(detail="future bases add no information to the prior")
    return prior.transformed(amap, future), amap.apply


def mse(
    prior: PriorData,
    future: Sequence[OrthonormalBasis] | None = None,
    opts: OptimizerOptions | None = None,
    method_tag: str = "mse_mub",
) -> Estimate:
    """Maximize the Shannon entropy of the probabilities of ``future`` (default: the unmeasured bases).

    Raises:
        DegenerateFutureMeasurement: ``future`` probabilities are fixed by the prior.
    """
    opts = opts or OptimizerOptions.from_settings()
    work, to_prior = _future_prior(prior, future)
    uniform = np.full(work.n_coords, 1 / 3)
    if membership(uniform, work):
        return Estimate.at_point(
            prior,
            to_prior(uniform),
            objective_value=float(np.sum(entr(uniform))),
            iterations=0,
            status=EstimateStatus.CONVERGED,
            method_tag=method_tag,
        )
    start = interior_start(work, opts)
    if isinstance(start, FeasiblePoint):
        logger.info("estimator_fallback", method=method_tag, min_eig=start.min_eig)
        fallback = fallback_estimate(work, start, method_tag)
        return Estimate.at_point(
            prior,
            to_prior(fallback.point),
            objective_value=fallback.objective_value,
            iterations=fallback.iterations,
            status=fallback.status,
            method_tag=method_tag,
        )
    u = start.u
    iterations = 0
    result: AscentResult | None = None
    for t in opts.barrier_schedule:
        evaluate, objective = barrier_objective(work, t)
        result = ascend(
            evaluate,
            objective,
            u,
            alpha=opts.armijo_alpha,
            beta=opts.armijo_beta,
            grad_tol=opts.grad_tol,
            max_iters=opts.max_iters,
            use_newton=opts.use_newton,
            quadform_tol=opts.hessian_quadform_tol,
            accept_grad_tol=opts.accept_grad_tol,
            value_rtol=opts.value_rtol,
        )
        u = result.x
        iterations += result.iterations
    converged = result is not None and (result.converged or result.stalled)
    q = lift(u)
    return Estimate.at_point(
        prior,
        to_prior(q),
        objective_value=float(np.sum(entr(q))),
        iterations=iterations,
        status=EstimateStatus.BOUNDARY_OPTIMUM if converged else EstimateStatus.FAILED,
        method_tag=method_tag,
    )


@register_estimator("mse_mub")
class MseMubEstimator(Estimator):
    """Shannon entropy of the remaining mutually unbiased bases."""

    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        return mse(prior, None, self.opts, method_tag=self.name)


@register_estimator("mse_random_basis")
class MseRandomBasisEstimator(Estimator):
    """Shannon entropy of a fixed Haar-random future basis per unmeasured slot.

    Pass ``future_bases`` to commit to bases across calls; otherwise they are drawn from ``rng``.
    """

    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        future = self.options.get("future_bases")
        if future is None:
            future = [OrthonormalBasis(kets=haar_unitary(rng)) for _ in range(prior.m)]
        return mse(prior, list(future)[: prior.m], self.opts, method_tag=self.name)
