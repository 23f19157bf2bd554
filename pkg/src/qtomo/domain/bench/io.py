from __future__ import annotations

import csv
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any

from qtomo.lib.exceptions import OutputError

__all__ = ("ensure_dir", "write_csv")


def ensure_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(detail=f"Could not create {path}: {exc}") from exc
    return path


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> Path:
    """Write ``rows`` under a fixed ``header``; missing keys are left empty."""
    ensure_dir(path.parent)
    try:
        with path.open("w", newline="", encoding="utf-8") as f:
            writer = csv.DictWriter(f, fieldnames=list(header), restval="", lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    except OSError as exc:
        raise OutputError(detail=f"Could not write {path}: {exc}") from exc
    return path
