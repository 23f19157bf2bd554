from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .estimator import Estimator

__all__ = ("estimator_mapping",)

# filled by @estimator_tool.register_estimator
estimator_mapping: dict[str, type[Estimator]] = {}
