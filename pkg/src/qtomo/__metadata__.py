"""Project metadata."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, metadata

from qtomo.__about__ import __version__

__all__ = [
    "__description__",
    "__project__",
    "__version__",
]

__project__ = "qtomo"
"""Distribution and command name."""

try:
    __description__ = metadata(__project__)["Summary"]
except PackageNotFoundError:  # running from a source checkout
    __description__ = "Point estimators and benchmarks for qutrit incomplete tomography"
"""One-line summary shown by ``qtomo --help``."""
