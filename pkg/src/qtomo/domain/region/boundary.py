"""Bracketing the boundary of the permissible region along rays from an interior point."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np
from scipy import optimize

from qtomo.config import get_settings
from qtomo.config.constants import BISECTION_TOL, BOUNDARY_TOL
from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import RealVector, check_simplex_point
from qtomo.lib.exceptions import InvalidInteriorPoint, UnsupportedRegionDimension

from .coords import simplex_directions
from .field import entropy_batch, min_eig_batch, min_eig_field
from .search import maximize_min_eig

if TYPE_CHECKING:
    from numpy.typing import NDArray

__all__ = (
    "BoundaryMesh",
    "BoundaryState",
    "bisect_rays",
    "min_entropy_boundary_state",
    "simplex_exit",
    "trace_boundary",
)

MAX_BISECTIONS = 200


@dataclass(frozen=True, kw_only=True)
class BoundaryMesh:
    angles: RealVector
    points: RealVector
    """``(n_angles, 3)`` boundary points."""
    min_eig: RealVector
    on_simplex_edge: NDArray[np.bool_]
    """The ray left the simplex without leaving the region; the point is the simplex edge point."""
    interior: RealVector

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"angle": float(a), "p1": float(p[0]), "p2": float(p[1]), "p3": float(p[2]), "min_eig": float(e)}
            for a, p, e in zip(self.angles, self.points, self.min_eig, strict=True)
        ]


@dataclass(frozen=True, kw_only=True)
class BoundaryState:
    point: RealVector
    angle: float
    entropy: float
    min_eig: float


def simplex_exit(origin: RealVector, directions: RealVector) -> RealVector:
    """Largest ``mu`` keeping ``origin + mu * d`` inside the simplex, for each row ``d``."""
    with np.errstate(divide="ignore", invalid="ignore"):
        limits = np.where(directions < 0, -origin / directions, np.inf)
    return np.asarray(limits.min(axis=1), dtype=np.float64)


def bisect_rays(
    prior: PriorData,
    origin: RealVector,
    directions: RealVector,
    upper: RealVector,
    tol: float = BISECTION_TOL,
) -> tuple[RealVector, NDArray[np.bool_]]:
    """Distance to the boundary along each ray, and whether the region reaches ``upper``.

    ``origin`` must be feasible. All rays are bisected together on ``lambda_min >= 0``
    until the bracket is shorter than ``tol``; the feasible end is returned.
    """
    upper = np.asarray(upper, dtype=np.float64)
    reaches_edge = min_eig_batch(origin + upper[:, None] * directions, prior) >= -BOUNDARY_TOL
    lo = np.zeros_like(upper)
    hi = upper.copy()
    for _ in range(MAX_BISECTIONS):
        active = ~reaches_edge & (hi - lo > tol)
        if not active.any():
            break
        mid = (lo + hi) / 2
        feasible = min_eig_batch(origin + mid[:, None] * directions, prior) >= 0.0
        lo = np.where(active & feasible, mid, lo)
        hi = np.where(active & ~feasible, mid, hi)
    return np.where(reaches_edge, upper, lo), reaches_edge


def _checked_interior(prior: PriorData, interior: RealVector | None) -> RealVector:
    if prior.m != 1:
        raise UnsupportedRegionDimension(detail=f"boundary tracing needs one unmeasured basis, got {prior.m}")
    if interior is None:
        best = maximize_min_eig(prior)
        if best.min_eig <= 0.0:
            raise InvalidInteriorPoint(detail=f"region has no interior, largest minimum eigenvalue {best.min_eig:.3e}")
        return best.point
    point = check_simplex_point(interior)
    if min_eig_field(point, prior) <= 0.0:
        raise InvalidInteriorPoint(detail="interior point is not strictly inside the region")
    return point


def _rays(angles: RealVector) -> RealVector:
    u_directions = np.stack([np.sin(angles), np.cos(angles)], axis=-1)
    return np.asarray(u_directions @ simplex_directions(1).T, dtype=np.float64)


def trace_boundary(
    prior: PriorData,
    n_angles: int | None = None,
    interior: RealVector | None = None,
) -> BoundaryMesh:
    """Boundary points on ``n_angles`` rays ``interior + mu (sin t, cos t)`` in reduced coordinates.

    ``interior`` defaults to the point of largest minimum eigenvalue.
    """
    n_angles = n_angles or get_settings().region.BOUNDARY_ANGLES
    origin = _checked_interior(prior, interior)
    angles = np.linspace(0.0, 2 * np.pi, n_angles, endpoint=False)
    directions = _rays(angles)
    mu, on_edge = bisect_rays(prior, origin, directions, simplex_exit(origin, directions))
    points = origin + mu[:, None] * directions
    return BoundaryMesh(
        angles=angles,
        points=points,
        min_eig=min_eig_batch(points, prior),
        on_simplex_edge=on_edge,
        interior=origin,
    )


def min_entropy_boundary_state(
    prior: PriorData,
    n_angles: int | None = None,
    interior: RealVector | None = None,
) -> BoundaryState:
    """Boundary point of least von Neumann entropy: the mesh minimum refined between its neighbouring angles.

    A value near zero indicates a pure state consistent with the prior.
    """
    mesh = trace_boundary(prior, n_angles, interior)
    entropies = entropy_batch(mesh.points, prior)
    best = int(np.argmin(entropies))
    step = 2 * np.pi / mesh.angles.size

    def point_at(angle: float) -> RealVector:
        direction = _rays(np.array([angle]))
        mu, _ = bisect_rays(prior, mesh.interior, direction, simplex_exit(mesh.interior, direction))
        return mesh.interior + mu[0] * direction[0]

    refined = optimize.minimize_scalar(
        lambda angle: float(entropy_batch(point_at(angle)[None, :], prior)[0]),
        bounds=(mesh.angles[best] - step, mesh.angles[best] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if refined.success and refined.fun < entropies[best]:
        point = point_at(float(refined.x))
        angle, entropy = float(refined.x) % (2 * np.pi), float(refined.fun)
    else:
        point, angle, entropy = mesh.points[best], float(mesh.angles[best]), float(entropies[best])
    return BoundaryState(point=point, angle=angle, entropy=entropy, min_eig=min_eig_field(point, prior))
