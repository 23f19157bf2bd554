from __future__ import annotations

from dataclasses import dataclass
from typing import TypeAlias

import numpy as np
from numpy.typing import NDArray

from qtomo.config.constants import DENSITY_HERMITIAN_TOL, DENSITY_TRACE_TOL, DIM, PSD_TOL
from qtomo.lib.exceptions import InvalidDensityMatrix

__all__ = (
    "ComplexMatrix3",
    "DensityMatrix",
    "EigenSystem",
    "RealVector",
)

ComplexMatrix3: TypeAlias = NDArray[np.complex128]
"""A 3x3 complex matrix."""
RealVector: TypeAlias = NDArray[np.float64]
"""Probability vectors, reduced coordinates and gradients."""


@dataclass(frozen=True, kw_only=True)
class EigenSystem:
    eigenvalues: RealVector
    """Ascending."""
    eigenvectors: ComplexMatrix3
    """Orthonormal eigenvectors as columns, in eigenvalue order."""


@dataclass(frozen=True, kw_only=True)
class DensityMatrix:
    """A qutrit state: Hermitian, unit trace, positive semidefinite within tolerance."""

    matrix: ComplexMatrix3

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.shape != (DIM, DIM):
            raise InvalidDensityMatrix(detail=f"expected a {DIM}x{DIM} matrix, got shape {matrix.shape}")
        if np.max(np.abs(matrix - matrix.conj().T)) > DENSITY_HERMITIAN_TOL:
            raise InvalidDensityMatrix(detail="matrix is not Hermitian")
        if abs(np.trace(matrix) - 1.0) > DENSITY_TRACE_TOL:
            raise InvalidDensityMatrix(detail=f"trace {np.trace(matrix).real:.3e} differs from one")
        if np.linalg.eigvalsh(matrix)[0] < -PSD_TOL:
            raise InvalidDensityMatrix(detail="matrix has a negative eigenvalue")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def maximally_mixed(cls) -> DensityMatrix:
        return cls(matrix=np.eye(DIM, dtype=np.complex128) / DIM)

    @classmethod
    def from_ket(cls, ket: NDArray[np.complex128]) -> DensityMatrix:
        vector = np.asarray(ket, dtype=np.complex128)
        vector = vector / np.linalg.norm(vector)
        return cls(matrix=np.outer(vector, vector.conj()))

    @classmethod
    def from_spectrum(cls, eigenvalues: RealVector, eigenbasis: ComplexMatrix3) -> DensityMatrix:
        """``U diag(eigenvalues) U^dagger`` for eigenvectors given as the columns of ``U``."""
        unitary = np.asarray(eigenbasis, dtype=np.complex128)
        matrix = (unitary * np.asarray(eigenvalues, dtype=np.float64)) @ unitary.conj().T
        return cls(matrix=(matrix + matrix.conj().T) / 2)

    @classmethod
    def from_candidate(cls, candidate: ComplexMatrix3) -> DensityMatrix:
        """Validate a reconstructed matrix, symmetrizing round-off first."""
        matrix = np.asarray(candidate, dtype=np.complex128)
        return cls(matrix=(matrix + matrix.conj().T) / 2)
