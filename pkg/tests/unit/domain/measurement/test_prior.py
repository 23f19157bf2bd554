from __future__ import annotations

import numpy as np
import pytest

from qtomo.domain.measurement import MeasuredProbabilities, PriorData, rho_of_unmeasured
from qtomo.domain.qcore import DensityMatrix
from qtomo.lib.exceptions import InvalidPriorData, InvalidSimplexPoint
from qtomo.lib.schema import MeasuredEntry, PriorFile


def test_measured_probabilities_validation() -> None:
    with pytest.raises(InvalidPriorData):
        MeasuredProbabilities(basis_index=4, probs=np.full(3, 1 / 3))
    with pytest.raises(InvalidSimplexPoint):
        MeasuredProbabilities(basis_index=1, probs=np.array([1.1, -0.1, 0.0]))
    entry = MeasuredProbabilities(basis_index=1, probs=np.array([0.5 + 1e-9, 0.5, -1e-9]))
    assert entry.probs.min() >= 0.0
    assert entry.probs.sum() == pytest.approx(1.0, abs=1e-15)


def test_prior_requires_all_bases_once() -> None:
    third = np.full(3, 1 / 3)
    with pytest.raises(InvalidPriorData):
        PriorData(measured=(MeasuredProbabilities(basis_index=1, probs=third),), unmeasured_indices=(0, 1))
    with pytest.raises(InvalidPriorData):
        PriorData(measured=(), unmeasured_indices=(0, 1, 2, 3))


@pytest.mark.parametrize("unmeasured", [(0,), (2,), (0, 1), (1, 3)])
def test_chart_reproduces_true_state(hs_state: DensityMatrix, unmeasured: tuple[int, ...]) -> None:
    prior = PriorData.from_state(hs_state, unmeasured)
    assert prior.m == len(unmeasured)
    assert prior.n_coords == 3 * len(unmeasured)
    candidate = rho_of_unmeasured(prior.true_coordinates(hs_state), prior)
    np.testing.assert_allclose(candidate, hs_state.matrix, atol=1e-10)


def test_candidates_have_unit_trace(hs_prior: PriorData, rng: np.random.Generator) -> None:
    points = rng.dirichlet(np.ones(3), size=50)
    stack = hs_prior.chart.batch(points)
    np.testing.assert_allclose(np.trace(stack, axis1=1, axis2=2), 1.0, atol=1e-12)
    np.testing.assert_allclose(stack, np.conj(np.swapaxes(stack, 1, 2)), atol=1e-12)


def test_rho_of_unmeasured_checks_size(hs_prior: PriorData) -> None:
    with pytest.raises(InvalidSimplexPoint):
        rho_of_unmeasured(np.full(6, 1 / 3), hs_prior)


def test_from_schema(hs_state: DensityMatrix, hs_prior: PriorData) -> None:
    data = PriorFile(
        measured=[MeasuredEntry(basis=e.basis_index, probs=e.probs.tolist()) for e in hs_prior.measured],
        unmeasured=[0],
    )
    loaded = PriorData.from_schema(data)
    np.testing.assert_allclose(loaded.chart.base, hs_prior.chart.base, atol=1e-14)
