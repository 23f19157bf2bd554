from __future__ import annotations

from pathlib import Path
from typing import Any

import pytest

from qtomo.domain.bench import ScenarioConfig, load_scenario_overrides
from qtomo.lib.exceptions import ConfigError, OutputError
from qtomo.lib.serialization import write_json


def test_defaults_come_from_settings() -> None:
    config = ScenarioConfig.from_settings(seed=3, workers=None)
    assert config.trials == 20
    assert config.com_samples == 2000
    assert config.seed == 3
    assert config.workers == 1
    assert config.trials_path == Path("results") / "trials.csv"


@pytest.mark.parametrize(
    "overrides",
    [
        {"trials": 0},
        {"seed": -1},
        {"unmeasured_count": 3},
        {"estimators": []},
        {"estimators": ["bayes"]},
        {"distances": ["trace"]},
        {"sampler": "ginibre"},
        {"com_samples": 10},
        {"purity_band": [0.5]},
        {"purity_band": [0.1, 0.5]},
        {"trials": "many"},
        {"colour": "blue"},
    ],
)
def test_invalid_scenarios(overrides: dict[str, Any]) -> None:
    with pytest.raises(ConfigError):
        ScenarioConfig.convert(overrides)


def test_two_unmeasured_drops_random_basis() -> None:
    config = ScenarioConfig(unmeasured_count=2)
    assert "mse_random_basis" not in config.effective_estimators()
    assert "mse_random_basis" in ScenarioConfig().effective_estimators()


def test_scenario_file_overrides(tmp_path: Path) -> None:
    path = write_json(tmp_path / "scenario.json", {"trials": 5, "sampler": "rank2"})
    config = ScenarioConfig.from_settings(trials=50).merge(load_scenario_overrides(path))
    assert config.trials == 5
    assert config.sampler_spec.kind == "rank2"


def test_scenario_file_errors(tmp_path: Path) -> None:
    path = write_json(tmp_path / "scenario.json", {"trails": 5})
    with pytest.raises(ConfigError):
        load_scenario_overrides(path)
    with pytest.raises(OutputError):
        load_scenario_overrides(tmp_path / "missing.json")
