from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .state_sampler import StateSampler

__all__ = ("sampler_mapping",)

# filled by @sampler_tool.register_sampler
sampler_mapping: dict[str, type[StateSampler]] = {}
