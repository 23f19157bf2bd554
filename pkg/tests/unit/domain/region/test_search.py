from __future__ import annotations

import numpy as np
import pytest

from qtomo.domain.region import (
    PriorData,
    ReducedCoords,
    find_feasible,
    maximize_min_eig,
    membership,
    membership_batch,
    sample_region,
    satisfies_subdeterminants,
)
from qtomo.lib.exceptions import InfeasibleRegionSuspected


def test_center_is_feasible(mixed_prior: PriorData) -> None:
    found = find_feasible(mixed_prior)
    assert found.iterations == 0
    np.testing.assert_allclose(found.point, np.full(3, 1 / 3))


def test_most_interior_point_of_simplex(mixed_prior: PriorData) -> None:
    best = maximize_min_eig(mixed_prior)
    assert best.min_eig == pytest.approx(1 / 3, abs=1e-8)


@pytest.mark.parametrize("prior_name", ["hs_prior", "two_slot_prior"])
def test_find_feasible(prior_name: str, request: pytest.FixtureRequest) -> None:
    prior: PriorData = request.getfixturevalue(prior_name)
    found = find_feasible(prior)
    assert found.min_eig >= 0.0
    assert membership(found.point, prior)
    best = maximize_min_eig(prior)
    assert best.min_eig >= found.min_eig - 1e-12


def test_infeasible_region(infeasible_prior: PriorData) -> None:
    with pytest.raises(InfeasibleRegionSuspected):
        find_feasible(infeasible_prior)
    assert maximize_min_eig(infeasible_prior).min_eig < 0.0


def test_find_feasible_from_a_corner(hs_prior: PriorData) -> None:
    found = find_feasible(hs_prior, ReducedCoords.from_point(np.array([1.0, 0.0, 0.0])))
    assert membership(found.point, hs_prior)


def test_region_is_convex(hs_prior: PriorData, rng: np.random.Generator) -> None:
    points = sample_region(hs_prior, 200, rng).points
    first, second = points[:100], points[100:]
    t = rng.uniform(size=(100, 1))
    assert membership_batch(t * first + (1 - t) * second, hs_prior).all()


def test_region_samples_satisfy_subdeterminants(hs_prior: PriorData, rng: np.random.Generator) -> None:
    for point in sample_region(hs_prior, 200, rng).points:
        assert satisfies_subdeterminants(point, hs_prior)
