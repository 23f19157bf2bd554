from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtomo.domain.qcore import (
    check_hermitian,
    eig_hermitian,
    is_psd_cholesky,
    is_psd_cholesky_batch,
    min_eigen,
    min_eigenvalues,
)
from qtomo.domain.sampling import sample_hs
from qtomo.lib.exceptions import NonHermitianInput


def test_check_hermitian_rejects() -> None:
    with pytest.raises(NonHermitianInput):
        check_hermitian(np.array([[1, 1j, 0], [1j, 0, 0], [0, 0, 0]]))
    with pytest.raises(NonHermitianInput):
        check_hermitian(np.eye(2))


def test_eig_hermitian_ascending() -> None:
    system = eig_hermitian(np.diag([3.0, 1.0, 2.0]).astype(complex))
    np.testing.assert_allclose(system.eigenvalues, [1.0, 2.0, 3.0])
    value, vector = min_eigen(np.diag([3.0, 1.0, 2.0]).astype(complex))
    assert value == pytest.approx(1.0)
    assert abs(vector[1]) == pytest.approx(1.0)


def test_cholesky_boundary_cases() -> None:
    assert is_psd_cholesky(np.diag([1.0, 0.0, 0.0]).astype(complex), tol=1e-10)
    assert not is_psd_cholesky(np.diag([1.0, -1e-3, 0.0]).astype(complex), tol=1e-10)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_batch_cholesky_matches_eigenvalues(seed: int) -> None:
    rng = np.random.default_rng(seed)
    states = np.stack([sample_hs(rng).matrix for _ in range(8)])
    shifted = states - 0.5 * np.eye(3)
    assert is_psd_cholesky_batch(states, tol=1e-10).all()
    assert not is_psd_cholesky_batch(shifted, tol=1e-10).any()
    assert (min_eigenvalues(shifted) < 0).all()
