from __future__ import annotations

import numpy as np
import pytest

from qtomo.domain.measurement import (
    born_probabilities,
    build_frame,
    canonical_frame,
    check_triples,
    qutrit_mub,
    reconstruct,
)
from qtomo.domain.qcore import DensityMatrix
from qtomo.lib.exceptions import DegenerateFrame, InconsistentProbabilities


def test_canonical_frame_spans_traceless_operators() -> None:
    frame = canonical_frame()
    assert frame.rank == 8
    assert frame.lambdas.shape == (12, 3, 3)
    np.testing.assert_allclose(np.trace(frame.lambdas, axis1=1, axis2=2), 0.0, atol=1e-14)


def test_degenerate_frame() -> None:
    identity = qutrit_mub().bases[0]
    with pytest.raises(DegenerateFrame):
        build_frame([identity] * 4)
    with pytest.raises(DegenerateFrame):
        build_frame(qutrit_mub().bases[:3])


def test_reconstruct_recovers_state(hs_state: DensityMatrix) -> None:
    probs = np.concatenate([born_probabilities(hs_state, basis) for basis in qutrit_mub().bases])
    np.testing.assert_allclose(reconstruct(probs), hs_state.matrix, atol=1e-10)


def test_check_triples() -> None:
    with pytest.raises(InconsistentProbabilities):
        check_triples(np.array([0.5, 0.5, 0.1]))
    with pytest.raises(InconsistentProbabilities):
        check_triples(np.array([0.5, 0.5]))
    with pytest.raises(InconsistentProbabilities):
        reconstruct(np.full(9, 1 / 3))
