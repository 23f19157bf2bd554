"""General utility functions."""

from __future__ import annotations

import importlib
import pkgutil
from pathlib import Path

__all__ = ("import_submodules",)


def import_submodules(package_name: str, package_file: str) -> list[str]:
    """Import every module of a package.

    Registries fill themselves through class decorators, so the modules holding
    the decorated classes must be imported before a lookup.

    Args:
        package_name: dotted name of the package, usually ``__name__``.
        package_file: path of the package ``__init__.py``, usually ``__file__``.

    Returns:
        The fully qualified names of the imported modules.
    """
    package_dir = Path(package_file).resolve().parent
    imported = []
    for _, module_name, _ in pkgutil.iter_modules([str(package_dir)]):
        full_module_name = f"{package_name}.{module_name}"
        importlib.import_module(full_module_name)
        imported.append(full_module_name)
    return imported
