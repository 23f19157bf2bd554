"""Exact-size Hermitian linear algebra for 3x3 matrices."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy import linalg

from qtomo.config.constants import DIM, HERMITIAN_INPUT_TOL
from qtomo.lib.exceptions import NonHermitianInput

from .types import ComplexMatrix3, EigenSystem, RealVector

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = (
    "check_hermitian",
    "cholesky_pivots",
    "eig_hermitian",
    "is_psd_cholesky",
    "is_psd_cholesky_batch",
    "min_eigen",
    "min_eigenvalues",
)


def check_hermitian(matrix: ComplexMatrix3, tol: float = HERMITIAN_INPUT_TOL) -> ComplexMatrix3:
    """Return ``matrix`` as a complex array after checking Hermiticity.

    Raises:
        NonHermitianInput: the max-norm of ``H - H^dagger`` exceeds ``tol`` or the shape is wrong.
    """
    h = np.asarray(matrix, dtype=np.complex128)
    if h.shape != (DIM, DIM):
        raise NonHermitianInput(detail=f"expected a {DIM}x{DIM} matrix, got shape {h.shape}")
    if np.max(np.abs(h - h.conj().T)) > tol:
        raise NonHermitianInput(detail="matrix differs from its conjugate transpose")
    return h


def eig_hermitian(matrix: ComplexMatrix3) -> EigenSystem:
    """Eigen-decomposition with ascending eigenvalues.

    LAPACK ``heevr`` through :func:`scipy.linalg.eigh` is deterministic for identical input bits.
    """
    h = check_hermitian(matrix)
    values, vectors = linalg.eigh(h, driver="evr")
    return EigenSystem(eigenvalues=np.asarray(values, dtype=np.float64), eigenvectors=vectors)


def min_eigen(matrix: ComplexMatrix3) -> tuple[float, ComplexMatrix3]:
    system = eig_hermitian(matrix)
    return float(system.eigenvalues[0]), system.eigenvectors[:, 0]


def min_eigenvalues(stack: ComplexMatrix3) -> RealVector:
    """Smallest eigenvalue of every matrix in an ``(n, 3, 3)`` Hermitian stack."""
    return np.asarray(np.linalg.eigvalsh(stack)[..., 0], dtype=np.float64)


def is_psd_cholesky(matrix: ComplexMatrix3, tol: float) -> bool:
    """True when ``H + tol*I`` admits a Cholesky factorization."""
    h = check_hermitian(matrix)
    try:
        linalg.cholesky(h + tol * np.eye(DIM), lower=True)
    except linalg.LinAlgError:
        return False
    return True


def cholesky_pivots(stack: ComplexMatrix3) -> RealVector:
    """Diagonal pivots of the LDL^dagger factorization of each 3x3 Hermitian matrix.

    Returns an ``(n, 3)`` array. Pivots after a non-positive one are ``nan``.
    """
    a = np.asarray(stack, dtype=np.complex128).reshape(-1, DIM, DIM)
    d1 = a[:, 0, 0].real
    with np.errstate(divide="ignore", invalid="ignore"):
        l21 = a[:, 1, 0] / d1
        l31 = a[:, 2, 0] / d1
        d2 = a[:, 1, 1].real - d1 * np.abs(l21) ** 2
        l32 = (a[:, 2, 1] - l31 * np.conj(l21) * d1) / d2
        d3 = a[:, 2, 2].real - d1 * np.abs(l31) ** 2 - d2 * np.abs(l32) ** 2
    pivots = np.stack([d1, d2, d3], axis=1)
    pivots[~(d1 > 0), 1:] = np.nan
    pivots[~(d2 > 0), 2] = np.nan
    return pivots


def is_psd_cholesky_batch(stack: ComplexMatrix3, tol: float) -> NDArray[np.bool_]:
    """Vectorized :func:`is_psd_cholesky` for an ``(n, 3, 3)`` stack."""
    shifted = np.asarray(stack, dtype=np.complex128) + tol * np.eye(DIM)
    pivots = cholesky_pivots(shifted)
    return np.asarray(np.all(pivots > 0, axis=1))
