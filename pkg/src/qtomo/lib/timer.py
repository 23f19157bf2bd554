from __future__ import annotations

import time
from collections.abc import Callable
from functools import wraps
from typing import ParamSpec, TypeVar

import structlog

__all__ = ("sync_timed",)

logger = structlog.get_logger()

P = ParamSpec("P")
R = TypeVar("R")


def sync_timed(func: Callable[P, R]) -> Callable[P, R]:
    """Log the execution time of the decorated function at debug level."""

    @wraps(func)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        start = time.perf_counter()
        result = func(*args, **kwargs)
        logger.debug("function_timed", function=func.__qualname__, seconds=round(time.perf_counter() - start, 4))
        return result

    return wrapper
