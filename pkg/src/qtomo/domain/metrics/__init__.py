from .area import AreaResult, MeasurementChoice, counting_multiplier, region_area, search_best_measurement
from .distances import (
    DistanceReport,
    RelativeEntropy,
    angular_distance,
    bures_distance,
    distance_report,
    fidelity,
    hs_distance,
    relative_entropy,
    relative_entropy_checked,
)

__all__ = [
    "AreaResult",
    "DistanceReport",
    "MeasurementChoice",
    "RelativeEntropy",
    "angular_distance",
    "bures_distance",
    "counting_multiplier",
    "distance_report",
    "fidelity",
    "hs_distance",
    "region_area",
    "relative_entropy",
    "relative_entropy_checked",
    "search_best_measurement",
]
