from __future__ import annotations

from functools import partial

import numpy as np
import pytest

from qtomo.lib.ascent import AscentStep, ascend, backtracking_step, validate_armijo
from qtomo.lib.exceptions import InvalidOptimizerOptions

PEAK = np.array([1.0, -2.0])
CURVATURE = np.diag([2.0, 0.5])


def _value(x: np.ndarray) -> float:
    d = x - PEAK
    return float(-0.5 * d @ CURVATURE @ d)


def _evaluate(x: np.ndarray) -> AscentStep:
    return AscentStep(value=_value(x), gradient=-CURVATURE @ (x - PEAK), hessian=-CURVATURE)


@pytest.mark.parametrize("use_newton", [False, True])
def test_ascend_concave_quadratic(use_newton: bool) -> None:
    result = ascend(
        _evaluate,
        _value,
        np.zeros(2),
        alpha=0.25,
        beta=0.5,
        grad_tol=1e-10,
        max_iters=500,
        use_newton=use_newton,
        quadform_tol=1e-20,
    )
    assert result.converged or result.stalled
    np.testing.assert_allclose(result.x, PEAK, atol=1e-6)
    if use_newton:
        assert result.iterations <= 2


def test_ascend_stops_early() -> None:
    result = ascend(
        _evaluate,
        _value,
        np.zeros(2),
        alpha=0.25,
        beta=0.5,
        grad_tol=0.0,
        max_iters=100,
        stop_when=lambda x, step: step.value > -1.0,
    )
    assert result.converged
    assert result.value > -1.0


def test_backtracking_rejects_infinite_values() -> None:
    def fenced(x: np.ndarray) -> float:
        return -np.inf if x[0] > 0.3 else float(x[0])

    found = backtracking_step(fenced, np.zeros(1), np.ones(1), 0.0, 1.0)
    assert found.accepted
    assert found.step == 0.25
    stuck = backtracking_step(lambda x: -np.inf, np.zeros(1), np.ones(1), 0.0, 1.0, max_halvings=5)
    assert not stuck.accepted
    assert stuck.step == 0.0


@pytest.mark.parametrize(("alpha", "beta"), [(0.0, 0.5), (0.5, 0.5), (0.25, 1.0), (0.25, 0.0)])
def test_armijo_parameters(alpha: float, beta: float) -> None:
    with pytest.raises(InvalidOptimizerOptions):
        validate_armijo(alpha, beta)


def _gradient_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(_evaluate(x).gradient))


def test_small_gradient_at_iteration_limit_is_accepted() -> None:
    run = partial(ascend, _evaluate, _value, np.zeros(2), alpha=0.25, beta=0.5, grad_tol=1e-12, max_iters=10)
    strict = run()
    assert not strict.converged
    assert not strict.stalled
    assert strict.iterations == 10
    assert 1e-6 < _gradient_norm(strict.x) < 1e-2
    loose = run(accept_grad_tol=1e-2)
    assert loose.converged
    np.testing.assert_array_equal(loose.x, strict.x)
    tight = run(accept_grad_tol=1e-6)
    assert not tight.converged


def test_stagnating_ascent_stops_once_the_gradient_is_small() -> None:
    result = ascend(
        _evaluate,
        _value,
        np.zeros(2),
        alpha=0.25,
        beta=0.5,
        grad_tol=0.0,
        max_iters=500,
        accept_grad_tol=1e-2,
        value_rtol=1.0,
    )
    assert result.converged
    assert result.iterations < 500
    assert _gradient_norm(result.x) <= 1e-2


def test_refused_iterate_is_never_accepted() -> None:
    def refused(x: np.ndarray) -> AscentStep:
        return AscentStep(value=-np.inf, gradient=np.zeros(2))

    result = ascend(
        refused,
        lambda x: -np.inf,
        np.zeros(2),
        alpha=0.25,
        beta=0.5,
        grad_tol=-1.0,
        max_iters=3,
        accept_grad_tol=1.0,
    )
    assert not result.converged
