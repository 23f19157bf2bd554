"""Reduced coordinates: free directions inside a product of probability simplexes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import linalg

from qtomo.config.constants import DIM
from qtomo.domain.qcore import RealVector

__all__ = (
    "ReducedCoords",
    "lift",
    "reduce",
    "simplex_center",
    "simplex_directions",
)


@lru_cache(maxsize=4)
def simplex_directions(m: int) -> RealVector:
    """``(3m, 2m)`` block-diagonal matrix of orthonormal in-plane directions, orthogonal to ``(1, 1, 1)``."""
    plane = linalg.null_space(np.ones((1, DIM)))
    directions = np.asarray(linalg.block_diag(*([plane] * m)), dtype=np.float64)
    directions.setflags(write=False)
    return directions


def simplex_center(m: int) -> RealVector:
    return np.full(DIM * m, 1 / DIM)


def lift(u: RealVector) -> RealVector:
    """Probabilities ``1/3 + D u``; works row-wise on ``(k, 2m)`` arrays."""
    u = np.asarray(u, dtype=np.float64)
    m = u.shape[-1] // 2
    return simplex_center(m) + u @ simplex_directions(m).T


def reduce(p: RealVector) -> RealVector:
    p = np.asarray(p, dtype=np.float64)
    m = p.shape[-1] // DIM
    return (p - simplex_center(m)) @ simplex_directions(m)


@dataclass(frozen=True, kw_only=True)
class ReducedCoords:
    u: RealVector

    @classmethod
    def from_point(cls, p: RealVector) -> ReducedCoords:
        return cls(u=reduce(p))

    @classmethod
    def center(cls, m: int) -> ReducedCoords:
        return cls(u=np.zeros(2 * m))

    @property
    def point(self) -> RealVector:
        return lift(self.u)
