"""Orthonormal qutrit bases, the canonical mutually unbiased set and the Born rule."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from qtomo.config.constants import DIM, N_BASES, ORTHONORMAL_TOL, UNBIASED_TOL
from qtomo.domain.qcore import ComplexMatrix3, DensityMatrix, RealVector
from qtomo.lib.exceptions import NonOrthonormalBasis

__all__ = (
    "MubSet",
    "OrthonormalBasis",
    "born_probabilities",
    "check_unbiased",
    "qutrit_mub",
)

OMEGA = np.exp(-2j * np.pi / 3)


@dataclass(frozen=True, kw_only=True)
class OrthonormalBasis:
    kets: ComplexMatrix3
    """Kets as the columns of a unitary matrix."""

    def __post_init__(self) -> None:
        kets = np.asarray(self.kets, dtype=np.complex128)
        if kets.shape != (DIM, DIM):
            raise NonOrthonormalBasis(detail=f"expected {DIM} kets of length {DIM}, got shape {kets.shape}")
        if np.max(np.abs(kets.conj().T @ kets - np.eye(DIM))) > ORTHONORMAL_TOL:
            raise NonOrthonormalBasis(detail="kets are not orthonormal")
        kets.setflags(write=False)
        object.__setattr__(self, "kets", kets)

    @property
    def projectors(self) -> ComplexMatrix3:
        """``(3, 3, 3)`` stack of ``|k><k|``."""
        return np.einsum("ak,bk->kab", self.kets, self.kets.conj())

    def relabeled(self, order: tuple[int, ...]) -> OrthonormalBasis:
        return OrthonormalBasis(kets=self.kets[:, list(order)])


@dataclass(frozen=True, kw_only=True)
class MubSet:
    bases: tuple[OrthonormalBasis, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != N_BASES:
            raise NonOrthonormalBasis(detail=f"a qutrit MUB set has {N_BASES} bases, got {len(self.bases)}")


@lru_cache(maxsize=1)
def qutrit_mub() -> MubSet:
    """The computational basis followed by the three Fourier-type bases, ``omega = exp(-2 pi i / 3)``."""
    w, w2 = OMEGA, OMEGA**2
    s = 1 / np.sqrt(3)
    matrices = (
        np.eye(DIM, dtype=np.complex128),
        s * np.array([[1, 1, 1], [1, w, w2], [1, w2, w]]),
        s * np.array([[1, 1, 1], [w, w2, 1], [w, 1, w2]]),
        s * np.array([[1, 1, 1], [w2, w, 1], [w2, 1, w]]),
    )
    return MubSet(bases=tuple(OrthonormalBasis(kets=m) for m in matrices))


def check_unbiased(a: OrthonormalBasis, b: OrthonormalBasis) -> bool:
    overlaps = np.abs(a.kets.conj().T @ b.kets) ** 2
    return bool(np.all(np.abs(overlaps - 1 / DIM) <= UNBIASED_TOL))


def born_probabilities(rho: DensityMatrix | ComplexMatrix3, basis: OrthonormalBasis) -> RealVector:
    """``p_k = <e_k|rho|e_k>``."""
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    kets = basis.kets
    return np.asarray(np.einsum("ak,ab,bk->k", kets.conj(), matrix, kets).real, dtype=np.float64)
