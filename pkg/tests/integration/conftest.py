from __future__ import annotations

from typing import TYPE_CHECKING

import pytest
from click.testing import CliRunner

from qtomo.domain.measurement import born_probabilities, qutrit_mub
from qtomo.lib.schema import MeasuredEntry, PriorFile
from qtomo.lib.serialization import write_json

if TYPE_CHECKING:
    from pathlib import Path

    from qtomo.domain.qcore import DensityMatrix


@pytest.fixture(name="runner")
def fx_runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(name="prior_file")
def fx_prior_file(tmp_path: Path, hs_state: DensityMatrix) -> Path:
    bases = qutrit_mub().bases
    data = PriorFile(
        measured=[
            MeasuredEntry(basis=index, probs=[float(p) for p in born_probabilities(hs_state, bases[index])])
            for index in (1, 2, 3)
        ],
        unmeasured=[0],
    )
    return write_json(tmp_path / "prior.json", data)
