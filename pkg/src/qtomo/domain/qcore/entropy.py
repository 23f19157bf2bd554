from __future__ import annotations

import numpy as np
from scipy.special import entr

from qtomo.config.constants import SIMPLEX_SUM_TOL
from qtomo.lib.exceptions import InvalidSimplexPoint

from .types import DensityMatrix, RealVector

__all__ = (
    "check_simplex_point",
    "shannon_entropy",
    "spectrum",
    "von_neumann_entropy",
)


def spectrum(rho: DensityMatrix) -> RealVector:
    """Eigenvalues of a state, ascending, with round-off negatives clipped to zero."""
    return np.clip(np.linalg.eigvalsh(rho.matrix), 0.0, None)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """``-sum(l ln l)`` over the spectrum in nats, with ``0 ln 0 = 0``."""
    return float(np.sum(entr(spectrum(rho))))


def check_simplex_point(probs: RealVector, tol: float = SIMPLEX_SUM_TOL) -> RealVector:
    p = np.asarray(probs, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise InvalidSimplexPoint(detail=f"expected a probability vector, got shape {p.shape}")
    if np.any(p < -tol):
        raise InvalidSimplexPoint(detail=f"negative probability {p.min():.3e}")
    if abs(p.sum() - 1.0) > tol:
        raise InvalidSimplexPoint(detail=f"probabilities sum to {p.sum():.12f}")
    return p


def shannon_entropy(probs: RealVector) -> float:
    """``-sum(p ln p)`` in nats."""
    p = check_simplex_point(probs)
    return float(np.sum(entr(np.clip(p, 0.0, None))))
