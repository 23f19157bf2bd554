from __future__ import annotations

import pytest

from qtomo.domain.qcore import DensityMatrix
from qtomo.domain.region import PriorData


@pytest.fixture(name="two_slot_prior")
def fx_two_slot_prior(hs_state: DensityMatrix) -> PriorData:
    """Computational and first Fourier bases unmeasured."""
    return PriorData.from_state(hs_state, (0, 1))
