from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from qtomo.lib.exceptions import ConfigError, OutputError
from qtomo.lib.schema import PriorFile
from qtomo.lib.serialization import (
    complex_from_pairs,
    complex_to_pairs,
    from_json,
    read_json,
    to_json,
    write_json,
)


def test_numpy_values_are_encoded() -> None:
    payload = {"point": np.array([0.5, 0.25, 0.25]), "count": np.int64(3)}
    assert json.loads(to_json(payload)) == {"point": [0.5, 0.25, 0.25], "count": 3}
    assert b"\n" not in to_json(payload, indent=0)


def test_unsupported_values() -> None:
    with pytest.raises((NotImplementedError, TypeError)):
        to_json({"value": object()})


def test_complex_pairs() -> None:
    matrix = np.array([[1.0, 0.5j], [-0.5j, 2.0]])
    assert complex_to_pairs(matrix)[0][1] == [0.0, 0.5]
    np.testing.assert_array_equal(complex_from_pairs(complex_to_pairs(matrix)), matrix)


def test_prior_file_validation() -> None:
    with pytest.raises(ConfigError):
        from_json(b'{"measured": [], "unmeasured": [0], "extra": 1}', PriorFile)
    with pytest.raises(ConfigError):
        from_json(b"{not json", PriorFile)


def test_file_errors(tmp_path: Path) -> None:
    with pytest.raises(OutputError):
        read_json(tmp_path / "missing.json", PriorFile)
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    with pytest.raises(OutputError):
        write_json(blocker / "out.json", {"a": 1})
