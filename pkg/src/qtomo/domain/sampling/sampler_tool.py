from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

from .sampler_config import sampler_mapping

if TYPE_CHECKING:
    from .state_sampler import StateSampler

__all__ = ("list_all_samplers", "register_sampler", "sampler_exists")


def register_sampler(sampler_name: str) -> Callable[[type[StateSampler]], type[StateSampler]]:
    def wrapper(cls: type[StateSampler]) -> type[StateSampler]:
        if sampler_name in sampler_mapping:
            raise ValueError(f"Sampler {sampler_name} is already registered")
        sampler_mapping[sampler_name] = cls
        cls.name = sampler_name
        return cls

    return wrapper


def list_all_samplers() -> list[str]:
    return list(sampler_mapping.keys())


def sampler_exists(sampler_name: str) -> bool:
    return sampler_name in sampler_mapping
