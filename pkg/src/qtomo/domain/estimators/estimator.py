from __future__ import annotations

import abc
from typing import TYPE_CHECKING, Any

from qtomo.lib.ascent import OptimizerOptions
from qtomo.lib.exceptions import UnknownComponentError

from .estimator_config import estimator_mapping

if TYPE_CHECKING:
    import numpy as np

    from qtomo.domain.measurement import PriorData

    from .estimate import Estimate

__all__ = ("Estimator",)

# register in the @estimator_tool.register_estimator


class Estimator(abc.ABC):
    name: str = ""

    def __init__(self, opts: OptimizerOptions | None = None, **kwargs: Any) -> None:
        self.opts = opts or OptimizerOptions.from_settings()
        self.options = kwargs

    @staticmethod
    def get_estimator(estimator_name: str, **kwargs: Any) -> Estimator:
        if estimator_name not in estimator_mapping:
            raise UnknownComponentError(detail=f"Estimator '{estimator_name}' is not registered")
        return estimator_mapping[estimator_name](**kwargs)

    @abc.abstractmethod
    def estimate(self, prior: PriorData, rng: np.random.Generator) -> Estimate:
        pass
