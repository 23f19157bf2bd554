from __future__ import annotations

import numpy as np
import pytest
from pytest_mock import MockerFixture

from qtomo.domain.bench import (
    ScenarioConfig,
    TrialStatus,
    fixed_random_bases,
    run_trial,
    trial_rng,
    unmeasured_bases,
)
from qtomo.lib.exceptions import InfeasibleRegionSuspected


@pytest.fixture(name="config")
def fx_config() -> ScenarioConfig:
    return ScenarioConfig(
        seed=42,
        trials=3,
        estimators=["mvne", "mse_mub", "random"],
        distances=["hs", "fidelity", "relative_entropy", "ratio_sqrt_area"],
        area_samples=2000,
    )


def test_trial_streams() -> None:
    assert trial_rng(1, 5).integers(2**32) == trial_rng(1, 5).integers(2**32)
    assert trial_rng(1, 5).integers(2**32) != trial_rng(1, 6).integers(2**32)
    assert trial_rng(1, 5).integers(2**32) != trial_rng(2, 5).integers(2**32)
    np.testing.assert_array_equal(fixed_random_bases(9, 1)[0].kets, fixed_random_bases(9, 1)[0].kets)
    assert unmeasured_bases(1) == (0,)
    assert unmeasured_bases(2) == (0, 1)


def test_trial_is_deterministic(config: ScenarioConfig) -> None:
    first = run_trial(config, 1)
    second = run_trial(config, 1)
    assert first.status is second.status
    np.testing.assert_equal(first.rows(), second.rows())


def test_trial_scores(config: ScenarioConfig) -> None:
    records = [run_trial(config, trial_id) for trial_id in range(4)]
    valid = [record for record in records if record.status is TrialStatus.OK]
    assert len(valid) >= 3
    for record in valid:
        assert list(record.distances) == ["mvne", "mse_mub", "random"]
        assert record.region_area is not None
        for scores in record.distances.values():
            assert 0.0 <= scores.d_hs <= np.sqrt(2)
            assert 0.0 <= scores.fidelity <= 1.0 + 1e-9
            assert not np.isnan(scores.d_relent)
            assert np.isfinite(scores.ratio)


def test_unrequested_distances_are_nan(config: ScenarioConfig) -> None:
    record = run_trial(config.merge({"distances": ["hs"], "estimators": ["random"]}), 0)
    scores = record.distances["random"]
    assert record.region_area is None
    assert np.isnan(scores.fidelity)
    assert np.isnan(scores.ratio)
    assert np.isfinite(scores.d_angular)


def test_estimator_failure_marks_trial(config: ScenarioConfig, mocker: MockerFixture) -> None:
    mocker.patch(
        "qtomo.domain.estimators.mvne.mvne",
        side_effect=InfeasibleRegionSuspected(detail="forced"),
    )
    record = run_trial(config, 2)
    assert record.status is TrialStatus.ALL_NAN
    assert all(np.isnan(scores.d_hs) for scores in record.distances.values())
    assert {row["status"] for row in record.rows()} == {"AllNaN"}
