from .entropy import check_simplex_point, shannon_entropy, spectrum, von_neumann_entropy
from .linalg import (
    check_hermitian,
    eig_hermitian,
    is_psd_cholesky,
    is_psd_cholesky_batch,
    min_eigen,
    min_eigenvalues,
)
from .types import ComplexMatrix3, DensityMatrix, EigenSystem, RealVector

__all__ = [
    "ComplexMatrix3",
    "DensityMatrix",
    "EigenSystem",
    "RealVector",
    "check_hermitian",
    "check_simplex_point",
    "eig_hermitian",
    "is_psd_cholesky",
    "is_psd_cholesky_batch",
    "min_eigen",
    "min_eigenvalues",
    "shannon_entropy",
    "spectrum",
    "von_neumann_entropy",
]
