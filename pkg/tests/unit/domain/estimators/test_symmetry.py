from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from qtomo.domain.estimators import Estimate, com, mse, mvne
from qtomo.domain.measurement import PriorData, qutrit_mub
from qtomo.domain.qcore import DensityMatrix

SHIFT = np.roll(np.eye(3), 1, axis=0)
"""``|k> -> |k+1>``: permutes the computational outcomes and maps every Fourier-type basis onto itself."""


def _shifted(state: DensityMatrix) -> DensityMatrix:
    return DensityMatrix(matrix=SHIFT @ state.matrix @ SHIFT.T)


def test_shift_preserves_the_fourier_bases() -> None:
    for basis in qutrit_mub().bases[1:]:
        overlaps = np.abs(basis.kets.conj().T @ SHIFT @ basis.kets) ** 2
        np.testing.assert_allclose(np.sort(overlaps, axis=1)[:, -1], 1.0, atol=1e-12)


@pytest.mark.parametrize("estimator", [mvne, mse], ids=["mvne", "mse_mub"])
def test_relabeled_outcomes_permute_the_estimate(
    estimator: Callable[[PriorData], Estimate],
    hs_state: DensityMatrix,
    pure_state: DensityMatrix,
) -> None:
    for state in (hs_state, pure_state):
        original = estimator(PriorData.from_state(state, (0,)))
        relabeled = estimator(PriorData.from_state(_shifted(state), (0,)))
        assert relabeled.status is original.status
        np.testing.assert_allclose(relabeled.point, np.roll(original.point, 1), atol=1e-5)
        assert relabeled.objective_value == pytest.approx(original.objective_value, abs=1e-8)


def test_relabeled_outcomes_permute_the_center_of_mass(hs_state: DensityMatrix) -> None:
    original = com(PriorData.from_state(hs_state, (0,)), 4000, np.random.default_rng(1))
    relabeled = com(PriorData.from_state(_shifted(hs_state), (0,)), 4000, np.random.default_rng(2))
    assert original.std_error is not None and relabeled.std_error is not None
    tolerance = 5 * (original.std_error.max() + relabeled.std_error.max())
    np.testing.assert_allclose(relabeled.point, np.roll(original.point, 1), atol=tolerance)
