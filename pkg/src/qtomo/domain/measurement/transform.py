from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from qtomo.config.constants import DEGENERATE_MAP_TOL, DIM
from qtomo.domain.qcore import RealVector
from qtomo.lib.exceptions import InvalidPriorData

from .bases import OrthonormalBasis
from .prior import PriorData

__all__ = (
    "AffineMap",
    "future_transform",
)


@dataclass(frozen=True, kw_only=True)
class AffineMap:
    """``f = V q + beta`` from future-basis probabilities ``q`` to current coordinates ``f``.

    ``forward_matrix`` and ``forward_offset`` give the opposite direction, ``q = W f + gamma``.
    """

    V: RealVector
    beta: RealVector
    jacobian: float
    forward_matrix: RealVector
    forward_offset: RealVector
    degenerate: bool = False

    def apply(self, q: RealVector) -> RealVector:
        return np.asarray(q, dtype=np.float64) @ self.V.T + self.beta

    def forward(self, f: RealVector) -> RealVector:
        return np.asarray(f, dtype=np.float64) @ self.forward_matrix.T + self.forward_offset


def _block_ones(m: int) -> RealVector:
    return np.asarray(linalg.block_diag(*([np.ones((DIM, DIM)) / DIM] * m)), dtype=np.float64)


def future_transform(prior: PriorData, alt_bases: Sequence[OrthonormalBasis]) -> AffineMap:
    """Affine relation between the current coordinates of ``prior`` and probabilities in ``alt_bases``.

    On states consistent with the prior, ``q_i = <a_i|rho(f)|a_i>`` is affine in ``f``.
    The linear part is made invertible on the coordinate planes by adding the
    per-triple averaging matrix, which leaves triples that sum to one unchanged.
    A map with ``|det| <= 1e-10`` is flagged degenerate; its ``V`` is a pseudoinverse
    and its jacobian is zero.
    """
    if len(alt_bases) != prior.m:
        raise InvalidPriorData(detail=f"expected {prior.m} future bases, got {len(alt_bases)}")
    kets = np.concatenate([basis.kets.T for basis in alt_bases])
    weights = np.einsum("ia,jab,ib->ij", kets.conj(), prior.chart.generators, kets).real
    offsets = np.einsum("ia,ab,ib->i", kets.conj(), prior.chart.base, kets).real
    forward_matrix = weights + _block_ones(prior.m)
    forward_offset = offsets - 1 / DIM
    det = float(np.linalg.det(forward_matrix))
    if abs(det) <= DEGENERATE_MAP_TOL:
        v = np.asarray(linalg.pinv(forward_matrix), dtype=np.float64)
        return AffineMap(
            V=v,
            beta=-v @ forward_offset,
            jacobian=0.0,
            forward_matrix=forward_matrix,
            forward_offset=forward_offset,
            degenerate=True,
        )
    v = np.asarray(linalg.inv(forward_matrix), dtype=np.float64)
    return AffineMap(
        V=v,
        beta=-v @ forward_offset,
        jacobian=abs(1.0 / det),
        forward_matrix=forward_matrix,
        forward_offset=forward_offset,
    )
