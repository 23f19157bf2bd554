from __future__ import annotations

from . import constants
from .base import Settings, get_settings

__all__ = (
    "Settings",
    "get_settings",
    "constants",
)
