"""Random qutrit states for benchmark ground truth."""

from __future__ import annotations

import numpy as np

from qtomo.config.constants import DIM
from qtomo.domain.qcore import ComplexMatrix3, DensityMatrix, RealVector
from qtomo.lib.exceptions import SamplerError

from .unitary import complex_ginibre, haar_unitary, sample_factorized_unitary

__all__ = (
    "purity",
    "random_pure",
    "sample_eig_simplex",
    "sample_factorized",
    "sample_hs",
    "sample_pure_mix",
    "sample_rank2",
)


def purity(rho: DensityMatrix | ComplexMatrix3) -> float:
    """``Tr rho^2``."""
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return float(np.einsum("ab,ba->", matrix, matrix).real)


def random_pure(rng: np.random.Generator) -> DensityMatrix:
    return DensityMatrix.from_ket(haar_unitary(rng)[:, 0])


def sample_hs(rng: np.random.Generator) -> DensityMatrix:
    """``A A^dagger / Tr(A A^dagger)`` with ``A`` Ginibre."""
    a = complex_ginibre(rng)
    gram = a @ a.conj().T
    return DensityMatrix.from_candidate(gram / np.trace(gram).real)


def sample_eig_simplex(rng: np.random.Generator, alpha: RealVector = (1.0, 1.0, 1.0)) -> DensityMatrix:
    """Dirichlet eigenvalues in a Haar eigenbasis."""
    alpha = np.asarray(alpha, dtype=np.float64)
    if alpha.shape != (DIM,) or np.any(alpha <= 0):
        raise SamplerError(detail=f"dirichlet alpha must be {DIM} positive numbers, got {alpha.tolist()}")
    return DensityMatrix.from_spectrum(rng.dirichlet(alpha), haar_unitary(rng))


def sample_pure_mix(rng: np.random.Generator) -> DensityMatrix:
    """``x |psi><psi| + (1 - x) I/3`` with ``x = sqrt(xi)``, so the purity is uniform on ``[1/3, 1]``."""
    x = np.sqrt(rng.uniform())
    psi = haar_unitary(rng)[:, 0]
    matrix = x * np.outer(psi, psi.conj()) + (1 - x) * np.eye(DIM) / DIM
    return DensityMatrix.from_candidate(matrix)


def sample_rank2(rng: np.random.Generator) -> DensityMatrix:
    """Eigenvalues ``(l, 1 - l, 0)`` with ``l`` uniform on ``[0.5, 1]`` in a Haar eigenbasis."""
    top = rng.uniform(0.5, 1.0)
    return DensityMatrix.from_spectrum(np.array([top, 1 - top, 0.0]), haar_unitary(rng))


def sample_factorized(rng: np.random.Generator, alpha: RealVector = (1.0, 1.0, 1.0)) -> DensityMatrix:
    """Dirichlet eigenvalues in an eigenbasis drawn through the unitary factorization."""
    spectrum = rng.dirichlet(np.asarray(alpha, dtype=np.float64))
    return DensityMatrix.from_spectrum(spectrum, sample_factorized_unitary(rng))
