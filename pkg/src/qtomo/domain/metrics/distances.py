"""Distances between qutrit states and between probability triples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from qtomo.config.constants import DIM, RELATIVE_ENTROPY_FLOOR
from qtomo.domain.qcore import ComplexMatrix3, DensityMatrix, RealVector, check_simplex_point

__all__ = (
    "DistanceReport",
    "RelativeEntropy",
    "angular_distance",
    "bures_distance",
    "distance_report",
    "fidelity",
    "hs_distance",
    "relative_entropy",
    "relative_entropy_checked",
)

StateLike = DensityMatrix | ComplexMatrix3


def _matrix(rho: StateLike) -> ComplexMatrix3:
    return rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)


def hs_distance(a: StateLike, b: StateLike) -> float:
    """``sqrt(Tr (a - b)^2)``, unnormalized, at most ``sqrt(2)``."""
    delta = _matrix(a) - _matrix(b)
    return float(np.sqrt(max(np.einsum("ab,ba->", delta, delta).real, 0.0)))


def _psd_sqrt(matrix: ComplexMatrix3) -> ComplexMatrix3:
    values, vectors = np.linalg.eigh(matrix)
    return (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.conj().T


def fidelity(a: StateLike, b: StateLike) -> float:
    """``Tr sqrt(sqrt(a) b sqrt(a))``; negative round-off eigenvalues count as zero."""
    root = _psd_sqrt(_matrix(a))
    inner = root @ _matrix(b) @ root
    values = np.linalg.eigvalsh((inner + inner.conj().T) / 2)
    return float(np.sum(np.sqrt(np.clip(values, 0.0, None))))


def bures_distance(a: StateLike, b: StateLike) -> float:
    return float(np.sqrt(max(2.0 * (1.0 - fidelity(a, b)), 0.0)))


@dataclass(frozen=True, kw_only=True)
class RelativeEntropy:
    value: float
    support_mismatch: bool
    """``a`` has weight where ``b`` has (numerically) none; ``value`` is then finite but floor-dominated."""


def relative_entropy_checked(a: StateLike, b: StateLike) -> RelativeEntropy:
    """``Tr a (ln a - ln b)`` in nats, evaluated in the eigenbasis of ``b`` with a ``1e-14`` eigenvalue floor."""
    a_matrix = _matrix(a)
    a_values = np.clip(np.linalg.eigvalsh(a_matrix), 0.0, None)
    b_values, b_vectors = np.linalg.eigh(_matrix(b))
    weights = np.einsum("ak,ab,bk->k", b_vectors.conj(), a_matrix, b_vectors).real
    floored = b_values < RELATIVE_ENTROPY_FLOOR
    cross = float(np.sum(weights * np.log(np.where(floored, RELATIVE_ENTROPY_FLOOR, b_values))))
    value = -float(np.sum(entr(a_values))) - cross
    mismatch = bool(np.any(floored & (weights > RELATIVE_ENTROPY_FLOOR)))
    return RelativeEntropy(value=max(value, 0.0), support_mismatch=mismatch)


def relative_entropy(a: StateLike, b: StateLike) -> float:
    return relative_entropy_checked(a, b).value


def angular_distance(p: RealVector, q: RealVector) -> float:
    """``arccos sum sqrt(p_i q_i)`` in radians.

    Vectors of several triples are compared triple by triple and the angles
    combined as a root-sum-square.
    """
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    angles = []
    for p_block, q_block in zip(p.reshape(-1, DIM), q.reshape(-1, DIM), strict=True):
        check_simplex_point(p_block, tol=1e-6)
        check_simplex_point(q_block, tol=1e-6)
        overlap = np.sum(np.sqrt(np.clip(p_block, 0.0, None) * np.clip(q_block, 0.0, None)))
        angles.append(np.arccos(np.clip(overlap, -1.0, 1.0)))
    return float(np.sqrt(np.sum(np.square(angles))))


@dataclass(frozen=True, kw_only=True)
class DistanceReport:
    hs: float
    fidelity: float
    bures: float
    relative_entropy: float
    """``D(true || estimate)`` in nats."""
    support_mismatch: bool = False


def distance_report(true_state: StateLike, estimate: StateLike) -> DistanceReport:
    f = fidelity(true_state, estimate)
    relent = relative_entropy_checked(true_state, estimate)
    return DistanceReport(
        hs=hs_distance(true_state, estimate),
        fidelity=f,
        bures=float(np.sqrt(max(2.0 * (1.0 - f), 0.0))),
        relative_entropy=relent.value,
        support_mismatch=relent.support_mismatch,
    )
