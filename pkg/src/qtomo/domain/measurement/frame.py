"""Frame operators and linear reconstruction through the frame pseudoinverse."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import linalg

from qtomo.config.constants import DIM, FRAME_RANK, INPUT_SUM_TOL, N_BASES, N_OUTCOMES, PINV_RTOL
from qtomo.domain.qcore import ComplexMatrix3, RealVector
from qtomo.lib.exceptions import DegenerateFrame, InconsistentProbabilities

from .bases import OrthonormalBasis, qutrit_mub

__all__ = (
    "Frame",
    "build_frame",
    "canonical_frame",
    "check_triples",
    "reconstruct",
)


@dataclass(frozen=True, kw_only=True)
class Frame:
    """Twelve traceless operators ``Lambda = |e><e| - I/3`` over four bases.

    Vectors indexed by frame element are ordered basis-major, ket-minor.
    """

    bases: tuple[OrthonormalBasis, ...]
    lambdas: ComplexMatrix3
    """``(12, 3, 3)``."""
    frame_matrix: RealVector
    """``M[j, k] = Tr(Lambda_j Lambda_k)``."""
    pinv: RealVector
    rank: int


def build_frame(bases: Sequence[OrthonormalBasis]) -> Frame:
    if len(bases) != N_BASES:
        raise DegenerateFrame(detail=f"a frame needs {N_BASES} bases, got {len(bases)}")
    projectors = np.concatenate([basis.projectors for basis in bases])
    lambdas = projectors - np.eye(DIM) / DIM
    frame_matrix = np.einsum("jab,kba->jk", lambdas, lambdas).real
    frame_matrix = (frame_matrix + frame_matrix.T) / 2
    pinv, rank = linalg.pinv(frame_matrix, atol=0.0, rtol=PINV_RTOL, return_rank=True)
    if rank < FRAME_RANK:
        raise DegenerateFrame(detail=f"frame matrix has rank {rank}, {FRAME_RANK} needed to span the states")
    lambdas.setflags(write=False)
    return Frame(bases=tuple(bases), lambdas=lambdas, frame_matrix=frame_matrix, pinv=pinv, rank=int(rank))


@lru_cache(maxsize=1)
def canonical_frame() -> Frame:
    return build_frame(qutrit_mub().bases)


def check_triples(probs: RealVector, tol: float = INPUT_SUM_TOL) -> RealVector:
    """Return ``probs`` as floats after checking each consecutive triple sums to one."""
    p = np.asarray(probs, dtype=np.float64)
    if p.ndim != 1 or p.size % DIM:
        raise InconsistentProbabilities(detail=f"expected whole basis triples, got shape {p.shape}")
    sums = p.reshape(-1, DIM).sum(axis=1)
    bad = np.flatnonzero(np.abs(sums - 1.0) > tol)
    if bad.size:
        raise InconsistentProbabilities(detail=f"triple {int(bad[0])} sums to {sums[bad[0]]:.9f}")
    return p


def reconstruct(all_probs: RealVector, frame: Frame | None = None) -> ComplexMatrix3:
    """``rho = I/3 + sum_k c_k Lambda_k`` with ``c = M^+ (p - 1/3)``.

    The result is Hermitian with unit trace; positivity is left to the caller.
    """
    frame = frame or canonical_frame()
    p = check_triples(all_probs)
    if p.size != N_OUTCOMES:
        raise InconsistentProbabilities(detail=f"expected {N_OUTCOMES} probabilities, got {p.size}")
    coefficients = frame.pinv @ (p - 1 / DIM)
    rho = np.eye(DIM, dtype=np.complex128) / DIM + np.einsum("k,kab->ab", coefficients, frame.lambdas)
    return (rho + rho.conj().T) / 2
