"""Backtracking line search and the ascent loop shared by the optimizers.

All optimizers here maximize. Objectives return ``-inf`` for points they
refuse (for example probes outside the permissible region) so that the
Armijo test rejects those probes and the step shrinks.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np
from scipy import linalg

from qtomo.lib.exceptions import InvalidOptimizerOptions

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = (
    "AscentResult",
    "AscentStep",
    "LineSearchResult",
    "OptimizerOptions",
    "ascend",
    "backtracking_step",
    "validate_armijo",
)

MAX_HALVINGS = 60


@dataclass(frozen=True, kw_only=True)
class LineSearchResult:
    step: float
    point: NDArray[np.float64]
    value: float
    accepted: bool


@dataclass(frozen=True, kw_only=True)
class AscentStep:
    """Objective value and derivatives at one iterate."""

    value: float
    gradient: NDArray[np.float64]
    hessian: NDArray[np.float64] | None = None


@dataclass(frozen=True, kw_only=True)
class AscentResult:
    x: NDArray[np.float64]
    value: float
    iterations: int
    converged: bool
    stalled: bool
    """The line search found no increase: the iterate is optimal to working precision."""


def validate_armijo(alpha: float, beta: float) -> None:
    if not 0.0 < alpha < 0.5:
        raise InvalidOptimizerOptions(detail=f"armijo alpha must lie in (0, 0.5), got {alpha}")
    if not 0.0 < beta < 1.0:
        raise InvalidOptimizerOptions(detail=f"armijo beta must lie in (0, 1), got {beta}")


def backtracking_step(
    objective: Callable[[NDArray[np.float64]], float],
    x: NDArray[np.float64],
    direction: NDArray[np.float64],
    value: float,
    slope: float,
    *,
    alpha: float = 0.25,
    beta: float = 0.5,
    max_halvings: int = MAX_HALVINGS,
) -> LineSearchResult:
    """Armijo backtracking for ascent.

    Accept the first ``t = beta**k`` with ``f(x + t*d) >= f(x) + alpha * t * slope``
    where ``slope`` is the directional derivative ``grad . d``.
    """
    t = 1.0
    for _ in range(max_halvings):
        candidate = x + t * direction
        candidate_value = objective(candidate)
        if candidate_value >= value + alpha * t * slope:
            return LineSearchResult(step=t, point=candidate, value=candidate_value, accepted=True)
        t *= beta
    return LineSearchResult(step=0.0, point=x, value=value, accepted=False)


def _newton_direction(gradient: NDArray[np.float64], hessian: NDArray[np.float64]) -> NDArray[np.float64] | None:
    try:
        return np.asarray(linalg.solve(-hessian, gradient, assume_a="pos"), dtype=np.float64)
    except (linalg.LinAlgError, ValueError):
        return None


def _settled(step: AscentStep, accept_grad_tol: float | None) -> bool:
    return (
        accept_grad_tol is not None
        and bool(np.isfinite(step.value))
        and float(np.linalg.norm(step.gradient)) <= accept_grad_tol
    )


def ascend(
    evaluate: Callable[[NDArray[np.float64]], AscentStep],
    objective: Callable[[NDArray[np.float64]], float],
    x0: NDArray[np.float64],
    *,
    alpha: float,
    beta: float,
    grad_tol: float,
    max_iters: int,
    use_newton: bool = False,
    quadform_tol: float = 1e-9,
    accept_grad_tol: float | None = None,
    value_rtol: float = 0.0,
    stop_when: Callable[[NDArray[np.float64], AscentStep], bool] | None = None,
) -> AscentResult:
    """Maximize ``objective`` from ``x0``.

    ``evaluate`` returns value and derivatives; ``objective`` only the value and is
    used for line-search probes. Newton directions are used when requested and the
    Hessian is negative definite, otherwise the gradient. Ends when ``stop_when``
    holds, when the gradient norm (or the Newton decrement ``s' H s``) is below
    tolerance, when the line search stalls or after ``max_iters`` iterations.

    With ``accept_grad_tol`` set, an iterate whose gradient norm is at most
    ``accept_grad_tol`` also counts as converged once a step gains no more than
    ``value_rtol * max(1, |f|)``, and when ``max_iters`` runs out.
    """
    validate_armijo(alpha, beta)
    x = np.asarray(x0, dtype=np.float64)
    step = evaluate(x)
    for iteration in range(max_iters):
        if stop_when is not None and stop_when(x, step):
            return AscentResult(x=x, value=step.value, iterations=iteration, converged=True, stalled=False)
        gradient = step.gradient
        direction = None
        if use_newton and step.hessian is not None:
            direction = _newton_direction(gradient, step.hessian)
        if direction is not None:
            decrement = float(gradient @ direction)
            if decrement <= quadform_tol:
                return AscentResult(x=x, value=step.value, iterations=iteration, converged=True, stalled=False)
        else:
            if float(np.linalg.norm(gradient)) <= grad_tol:
                return AscentResult(x=x, value=step.value, iterations=iteration, converged=True, stalled=False)
            direction = gradient
        slope = float(gradient @ direction)
        found = backtracking_step(objective, x, direction, step.value, slope, alpha=alpha, beta=beta)
        if not found.accepted:
            return AscentResult(x=x, value=step.value, iterations=iteration, converged=False, stalled=True)
        gain = found.value - step.value
        x = found.point
        step = evaluate(x)
        if gain <= value_rtol * max(1.0, abs(step.value)) and _settled(step, accept_grad_tol):
            return AscentResult(x=x, value=step.value, iterations=iteration + 1, converged=True, stalled=False)
    converged = (stop_when is not None and stop_when(x, step)) or _settled(step, accept_grad_tol)
    return AscentResult(x=x, value=step.value, iterations=max_iters, converged=converged, stalled=False)


@dataclass(frozen=True, kw_only=True)
class OptimizerOptions:
    """Line search, barrier and stopping parameters shared by the optimizers."""

    armijo_alpha: float = 0.25
    armijo_beta: float = 0.5
    barrier_t: float = 1e-4
    grad_tol: float = 1e-9
    max_iters: int = 5000
    hessian_quadform_tol: float = 1e-9
    accept_grad_tol: float = 1e-6
    """Gradient norm at which a stagnating or out-of-iterations ascent still counts as converged."""
    value_rtol: float = 1e-12
    use_newton: bool = False
    continuation: bool = False
    feasibility_margin: float = 1e-9

    def __post_init__(self) -> None:
        validate_armijo(self.armijo_alpha, self.armijo_beta)
        if not self.barrier_t > 0:
            raise InvalidOptimizerOptions(detail=f"barrier_t must be positive, got {self.barrier_t}")
        if self.max_iters < 1:
            raise InvalidOptimizerOptions(detail=f"max_iters must be at least 1, got {self.max_iters}")
        if min(self.grad_tol, self.hessian_quadform_tol, self.accept_grad_tol, self.value_rtol) < 0:
            raise InvalidOptimizerOptions(detail="stopping tolerances must be non-negative")

    @classmethod
    def from_settings(cls, **overrides: Any) -> OptimizerOptions:
        from qtomo.config import get_settings

        optimizer = get_settings().optimizer
        values: dict[str, Any] = {
            "armijo_alpha": optimizer.ARMIJO_ALPHA,
            "armijo_beta": optimizer.ARMIJO_BETA,
            "barrier_t": optimizer.BARRIER_T,
            "grad_tol": optimizer.GRAD_TOL,
            "max_iters": optimizer.MAX_ITERS,
            "hessian_quadform_tol": optimizer.HESSIAN_QUADFORM_TOL,
            "accept_grad_tol": optimizer.ACCEPT_GRAD_TOL,
            "value_rtol": optimizer.VALUE_RTOL,
            "use_newton": optimizer.USE_NEWTON,
            "continuation": optimizer.CONTINUATION,
            "feasibility_margin": optimizer.FEASIBILITY_MARGIN,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    @property
    def barrier_schedule(self) -> tuple[float, ...]:
        """Barrier weights to run in order: the continuation sequence ending at ``barrier_t``, or just ``barrier_t``."""
        if not self.continuation:
            return (self.barrier_t,)
        return (*(t for t in (1e-2, 1e-3) if t > self.barrier_t), self.barrier_t)
