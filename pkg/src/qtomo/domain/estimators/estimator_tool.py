from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

from .estimator_config import estimator_mapping

if TYPE_CHECKING:
    from .estimator import Estimator

__all__ = ("estimator_exists", "list_all_estimators", "register_estimator")


def register_estimator(estimator_name: str) -> Callable[[type[Estimator]], type[Estimator]]:
    def wrapper(cls: type[Estimator]) -> type[Estimator]:
        if estimator_name in estimator_mapping:
            raise ValueError(f"Estimator {estimator_name} is already registered")
        estimator_mapping[estimator_name] = cls
        cls.name = estimator_name
        return cls

    return wrapper


def list_all_estimators() -> list[str]:
    return list(estimator_mapping.keys())


def estimator_exists(estimator_name: str) -> bool:
    return estimator_name in estimator_mapping
