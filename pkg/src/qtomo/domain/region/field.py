"""Feasibility and the minimum-eigenvalue field over the unmeasured probabilities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import entr

from qtomo.config.constants import DEGENERACY_GAP, PSD_TOL
from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import ComplexMatrix3, RealVector, is_psd_cholesky_batch, min_eigenvalues

from .coords import lift, simplex_directions

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = (
    "MinEigGradient",
    "candidate_batch",
    "det_field",
    "entropy_batch",
    "grad_min_eig",
    "membership",
    "membership_batch",
    "min_eig_batch",
    "min_eig_field",
    "satisfies_subdeterminants",
    "subdeterminant_bounds",
)


@dataclass(frozen=True, kw_only=True)
class MinEigGradient:
    value: float
    gradient: RealVector
    """Derivative with respect to the reduced coordinates."""
    gradient_p: RealVector
    """Derivative with respect to the probabilities, before projection."""
    eigenvector: ComplexMatrix3
    degenerate: bool
    """The two smallest eigenvalues are closer than the degeneracy gap; ``gradient`` is then a subgradient."""


def candidate_batch(points: RealVector, prior: PriorData) -> ComplexMatrix3:
    stack = prior.chart.batch(points)
    return (stack + np.conj(np.swapaxes(stack, -1, -2))) / 2


def membership_batch(points: RealVector, prior: PriorData, tol: float = PSD_TOL) -> NDArray[np.bool_]:
    return is_psd_cholesky_batch(candidate_batch(points, prior), tol)


def membership(p: RealVector, prior: PriorData, tol: float = PSD_TOL) -> bool:
    """Cholesky test of ``rho(p) + tol*I``."""
    return bool(membership_batch(np.asarray(p, dtype=np.float64)[None, :], prior, tol)[0])


def min_eig_batch(points: RealVector, prior: PriorData) -> RealVector:
    return min_eigenvalues(candidate_batch(points, prior))


def min_eig_field(p: RealVector, prior: PriorData) -> float:
    return float(min_eig_batch(np.asarray(p, dtype=np.float64)[None, :], prior)[0])


def det_field(points: RealVector, prior: PriorData) -> RealVector:
    return np.asarray(np.linalg.det(candidate_batch(points, prior)).real, dtype=np.float64)


def grad_min_eig(u: RealVector, prior: PriorData) -> MinEigGradient:
    """``d lambda_min / d p_j = <E|G_j|E>`` projected onto the reduced directions."""
    candidate = candidate_batch(lift(u)[None, :], prior)[0]
    values, vectors = np.linalg.eigh(candidate)
    e = vectors[:, 0]
    gradient_p = np.einsum("a,jab,b->j", e.conj(), prior.chart.generators, e).real
    return MinEigGradient(
        value=float(values[0]),
        gradient=gradient_p @ simplex_directions(prior.m),
        gradient_p=gradient_p,
        eigenvector=e,
        degenerate=bool(values[1] - values[0] <= DEGENERACY_GAP),
    )


def subdeterminant_bounds(p: RealVector, prior: PriorData) -> RealVector:
    """The three 2x2 principal minors ``(xy - |a|^2, xz - |b|^2, yz - |c|^2)`` of ``rho(p)``."""
    rho = candidate_batch(np.atleast_2d(p), prior)
    d = rho[:, [0, 0, 1], [0, 0, 1]].real * rho[:, [1, 2, 2], [1, 2, 2]].real
    off = np.abs(rho[:, [0, 0, 1], [1, 2, 2]]) ** 2
    minors = d - off
    return minors[0] if np.ndim(p) == 1 else minors


def satisfies_subdeterminants(p: RealVector, prior: PriorData, tol: float = 1e-8) -> bool:
    return bool(np.all(subdeterminant_bounds(p, prior) >= -tol))


def entropy_batch(points: RealVector, prior: PriorData) -> RealVector:
    """Von Neumann entropy of each candidate, negative eigenvalues clipped to zero."""
    values = np.clip(np.linalg.eigvalsh(candidate_batch(points, prior)), 0.0, None)
    return np.asarray(entr(values).sum(axis=-1), dtype=np.float64)
