from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest

from qtomo.config import base
from qtomo.domain.measurement import MeasuredProbabilities, PriorData
from qtomo.domain.qcore import DensityMatrix
from qtomo.domain.sampling import random_pure, sample_hs

if TYPE_CHECKING:
    from collections.abc import Iterator


@pytest.fixture(autouse=True)
def _patch_settings() -> Iterator[None]:
    """Load the testing environment and drop cached settings around each test."""
    base.Settings.from_env(".env.testing")
    base.get_settings.cache_clear()
    yield
    base.get_settings.cache_clear()


@pytest.fixture(name="rng")
def fx_rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture(name="mixed_state")
def fx_mixed_state() -> DensityMatrix:
    return DensityMatrix.maximally_mixed()


@pytest.fixture(name="mixed_prior")
def fx_mixed_prior(mixed_state: DensityMatrix) -> PriorData:
    """All three Fourier bases uniform: every diagonal state fits, the region is the whole simplex."""
    return PriorData.from_state(mixed_state, (0,))


@pytest.fixture(name="hs_state")
def fx_hs_state() -> DensityMatrix:
    return sample_hs(np.random.default_rng(7))


@pytest.fixture(name="hs_prior")
def fx_hs_prior(hs_state: DensityMatrix) -> PriorData:
    return PriorData.from_state(hs_state, (0,))


@pytest.fixture(name="pure_state")
def fx_pure_state() -> DensityMatrix:
    return random_pure(np.random.default_rng(11))


@pytest.fixture(name="pure_prior")
def fx_pure_prior(pure_state: DensityMatrix) -> PriorData:
    return PriorData.from_state(pure_state, (0,))


@pytest.fixture(name="infeasible_prior")
def fx_infeasible_prior() -> PriorData:
    """Certain outcomes in three mutually unbiased bases: no state reproduces them."""
    certain = np.array([1.0, 0.0, 0.0])
    return PriorData(
        measured=tuple(MeasuredProbabilities(basis_index=index, probs=certain) for index in (1, 2, 3)),
        unmeasured_indices=(0,),
    )
