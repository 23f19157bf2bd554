from __future__ import annotations

from qtomo.domain.measurement import PriorData
from qtomo.domain.region import FeasiblePoint, ReducedCoords, maximize_min_eig, min_eig_field
from qtomo.lib.ascent import OptimizerOptions

__all__ = ("interior_start",)


def interior_start(prior: PriorData, opts: OptimizerOptions) -> ReducedCoords | FeasiblePoint:
    """A strictly feasible start, or the most interior point when even that misses the feasibility margin.

    The simplex center is used when it clears the margin.
    """
    center = ReducedCoords.center(prior.m)
    if min_eig_field(center.point, prior) >= opts.feasibility_margin:
        return center
    best = maximize_min_eig(prior, opts)
    if best.min_eig < opts.feasibility_margin:
        return best
    return ReducedCoords(u=best.u)
