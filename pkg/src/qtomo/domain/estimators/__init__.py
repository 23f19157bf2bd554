from qtomo.lib.ascent import OptimizerOptions
from qtomo.utils import import_submodules

from .ensemble import ensemble_mse
from .estimate import Estimate, EstimateStatus
from .estimator import Estimator
from .estimator_config import estimator_mapping
from .estimator_tool import estimator_exists, list_all_estimators, register_estimator
from .montecarlo import com, random_estimator
from .mse import mse
from .mvne import mvne

import_submodules(__name__, __file__)

__all__ = [
    "Estimate",
    "EstimateStatus",
    "Estimator",
    "OptimizerOptions",
    "com",
    "ensemble_mse",
    "estimator_exists",
    "estimator_mapping",
    "list_all_estimators",
    "mse",
    "mvne",
    "random_estimator",
    "register_estimator",
]
