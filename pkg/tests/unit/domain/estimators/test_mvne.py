from __future__ import annotations

import numpy as np
import pytest
from scipy import optimize

from qtomo.domain.bench import barycentric_grid
from qtomo.domain.estimators import EstimateStatus, OptimizerOptions, mvne
from qtomo.domain.estimators.mvne import entropy_objective
from qtomo.domain.qcore import DensityMatrix, von_neumann_entropy
from qtomo.domain.region import (
    PriorData,
    ReducedCoords,
    entropy_batch,
    lift,
    membership_batch,
    reduce,
    sample_region,
    simplex_directions,
)
from qtomo.lib.ascent import ascend


def test_maximally_mixed_is_its_own_estimate(mixed_prior: PriorData) -> None:
    estimate = mvne(mixed_prior)
    assert estimate.status is EstimateStatus.CONVERGED
    assert estimate.iterations == 0
    np.testing.assert_allclose(estimate.point, np.full(3, 1 / 3), atol=1e-12)
    assert estimate.objective_value == pytest.approx(np.log(3))


@pytest.mark.parametrize("prior_name", ["hs_prior", "two_slot_prior"])
def test_entropy_at_least_true_state(prior_name: str, hs_state: DensityMatrix, request: pytest.FixtureRequest) -> None:
    prior: PriorData = request.getfixturevalue(prior_name)
    estimate = mvne(prior)
    assert estimate.status is EstimateStatus.CONVERGED
    assert estimate.min_eig >= -1e-8
    assert estimate.objective_value >= von_neumann_entropy(hs_state) - 1e-9
    assert estimate.point.shape == (prior.n_coords,)


def test_entropy_gradient(hs_state: DensityMatrix, hs_prior: PriorData) -> None:
    evaluate, objective = entropy_objective(hs_prior)
    u = reduce(hs_prior.true_coordinates(hs_state))
    step = evaluate(u)
    assert step.value == pytest.approx(von_neumann_entropy(hs_state))
    h = 1e-6
    numeric = [(objective(u + h * e) - objective(u - h * e)) / (2 * h) for e in np.eye(2)]
    np.testing.assert_allclose(step.gradient, numeric, atol=1e-5)
    assert objective(ReducedCoords.from_point(np.array([1.0, 0.0, 0.0])).u) == -np.inf


def test_fallback_on_empty_region(infeasible_prior: PriorData) -> None:
    estimate = mvne(infeasible_prior, OptimizerOptions(max_iters=200))
    assert estimate.status is EstimateStatus.FALLBACK_MAX_MIN_EIG
    assert estimate.status.is_failure


def test_log_of_estimate_is_orthogonal_to_the_chart(hs_prior: PriorData) -> None:
    estimate = mvne(hs_prior)
    values, vectors = np.linalg.eigh(estimate.state().matrix)
    log_rho = (vectors * np.log(values)) @ vectors.conj().T
    overlaps = np.einsum("ab,jba->j", log_rho, hs_prior.chart.generators).real
    residual = overlaps @ simplex_directions(hs_prior.m)
    assert np.abs(residual).max() <= 1e-5


def test_starts_agree(hs_prior: PriorData, rng: np.random.Generator) -> None:
    reference = mvne(hs_prior)
    evaluate, objective = entropy_objective(hs_prior)
    opts = OptimizerOptions.from_settings()
    for point in sample_region(hs_prior, 3, rng).points:
        result = ascend(
            evaluate,
            objective,
            reduce(point),
            alpha=opts.armijo_alpha,
            beta=opts.armijo_beta,
            grad_tol=opts.grad_tol,
            max_iters=opts.max_iters,
        )
        assert result.value == pytest.approx(reference.objective_value, abs=1e-10)
        np.testing.assert_allclose(result.x, reduce(reference.point), atol=1e-5)


def test_matches_refined_grid_search(hs_prior: PriorData) -> None:
    grid = barycentric_grid(301)
    feasible = grid[membership_batch(grid, hs_prior)]
    assert len(feasible) >= 10
    entropies = entropy_batch(feasible, hs_prior)
    _, objective = entropy_objective(hs_prior)
    refined = optimize.minimize(
        lambda u: -objective(u),
        reduce(feasible[int(np.argmax(entropies))]),
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-15, "maxiter": 4000},
    )
    estimate = mvne(hs_prior)
    assert estimate.objective_value >= entropies.max() - 1e-9
    assert estimate.objective_value >= -refined.fun - 1e-9
    np.testing.assert_allclose(estimate.point, lift(refined.x), atol=1e-4)


def test_unreachable_gradient_tolerance_still_converges(hs_prior: PriorData) -> None:
    reference = mvne(hs_prior)
    estimate = mvne(hs_prior, OptimizerOptions(grad_tol=0.0))
    assert estimate.status is EstimateStatus.CONVERGED
    assert estimate.objective_value == pytest.approx(reference.objective_value, abs=1e-10)
