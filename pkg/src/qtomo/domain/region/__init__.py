from qtomo.domain.measurement import MeasuredProbabilities, PriorData

from .boundary import BoundaryMesh, BoundaryState, min_entropy_boundary_state, trace_boundary
from .coords import ReducedCoords, lift, reduce, simplex_center, simplex_directions
from .field import (
    MinEigGradient,
    det_field,
    entropy_batch,
    grad_min_eig,
    membership,
    membership_batch,
    min_eig_batch,
    min_eig_field,
    satisfies_subdeterminants,
    subdeterminant_bounds,
)
from .montecarlo import RegionSample, sample_region, uniform_simplex_points
from .search import FeasiblePoint, find_feasible, maximize_min_eig

__all__ = [
    "BoundaryMesh",
    "BoundaryState",
    "FeasiblePoint",
    "MeasuredProbabilities",
    "MinEigGradient",
    "PriorData",
    "ReducedCoords",
    "RegionSample",
    "det_field",
    "entropy_batch",
    "find_feasible",
    "grad_min_eig",
    "lift",
    "maximize_min_eig",
    "membership",
    "membership_batch",
    "min_eig_batch",
    "min_eig_field",
    "min_entropy_boundary_state",
    "reduce",
    "sample_region",
    "satisfies_subdeterminants",
    "simplex_center",
    "simplex_directions",
    "subdeterminant_bounds",
    "trace_boundary",
    "uniform_simplex_points",
]
