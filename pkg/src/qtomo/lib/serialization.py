from __future__ import annotations

from typing import TYPE_CHECKING, Any, TypeVar

import msgspec
import numpy as np

from qtomo.lib.exceptions import ConfigError, OutputError

if TYPE_CHECKING:
    from pathlib import Path

    from numpy.typing import NDArray

__all__ = (
    "complex_from_pairs",
    "complex_to_pairs",
    "from_json",
    "read_json",
    "to_json",
    "write_json",
)

T = TypeVar("T")


def _default(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    msg = f"Unsupported type: {type(value)!r}"
    raise NotImplementedError(msg)


_encoder = msgspec.json.Encoder(enc_hook=_default)


def to_json(value: Any, indent: int = 2) -> bytes:
    encoded = _encoder.encode(value)
    return msgspec.json.format(encoded, indent=indent) if indent else encoded


def from_json(value: bytes | str, target_type: type[T]) -> T:
    try:
        return msgspec.json.decode(value, type=target_type)
    except (msgspec.ValidationError, msgspec.DecodeError) as exc:
        raise ConfigError(detail=f"Invalid {target_type.__name__}: {exc}") from exc


def write_json(path: Path, value: Any) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(to_json(value))
    except OSError as exc:
        raise OutputError(detail=f"Could not write {path}: {exc}") from exc
    return path


def read_json(path: Path, target_type: type[T]) -> T:
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise OutputError(detail=f"Could not read {path}: {exc}") from exc
    return from_json(raw, target_type)


def complex_to_pairs(matrix: NDArray[np.complex128]) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def complex_from_pairs(pairs: list[list[list[float]]]) -> NDArray[np.complex128]:
    arr = np.asarray(pairs, dtype=np.float64)
    return arr[..., 0] + 1j * arr[..., 1]
