from __future__ import annotations

import json
from pathlib import Path

from click.testing import CliRunner
from pytest_mock import MockerFixture

from qtomo.cli.commands import qtomo_app
from qtomo.domain.bench import TrialDistances, TrialRecord, TrialStatus
from qtomo.lib.serialization import write_json


def test_version(runner: CliRunner) -> None:
    result = runner.invoke(qtomo_app, ["--version"])
    assert result.exit_code == 0
    assert "qtomo" in result.output


def test_sample(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "states.json"
    result = runner.invoke(qtomo_app, ["sample", "--sampler", "rank2", "--count", "3", "--out", str(out)])
    assert result.exit_code == 0, result.output
    states = json.loads(out.read_text())
    assert [s["index"] for s in states] == [0, 1, 2]
    assert all(0.5 <= s["purity"] <= 1.0 + 1e-9 for s in states)


def test_estimate(runner: CliRunner, prior_file: Path) -> None:
    result = runner.invoke(qtomo_app, ["estimate", "--prior", str(prior_file), "--method", "mvne"])
    assert result.exit_code == 0, result.output
    assert '"method": "mvne"' in result.output


def test_area_and_boundary(runner: CliRunner, prior_file: Path, tmp_path: Path) -> None:
    area = tmp_path / "area.json"
    result = runner.invoke(qtomo_app, ["area", "--prior", str(prior_file), "--samples", "2000", "--out", str(area)])
    assert result.exit_code == 0, result.output
    assert json.loads(area.read_text())["n"] == 2000
    boundary = tmp_path / "boundary.csv"
    result = runner.invoke(
        qtomo_app, ["boundary", "--prior", str(prior_file), "--angles", "32", "--out", str(boundary)]
    )
    assert result.exit_code == 0, result.output
    assert len(boundary.read_text().splitlines()) == 33


def test_region(runner: CliRunner, prior_file: Path, tmp_path: Path) -> None:
    out = tmp_path / "region.csv"
    args = ["region", "--prior", str(prior_file), "--grid-n", "4", "--angles", "8", "--out", str(out)]
    result = runner.invoke(qtomo_app, args)
    assert result.exit_code == 0, result.output
    assert out.read_text().startswith("kind,p1,p2,p3,min_eig,det,feasible")


def test_bench(runner: CliRunner, tmp_path: Path) -> None:
    scenario = write_json(tmp_path / "scenario.json", {"trials": 2})
    args = [
        "bench",
        "--seed", "3",
        "--trials", "9",
        "--estimators", "mvne,random",
        "--distances", "hs",
        "--out", str(tmp_path),
        "--config", str(scenario),
    ]  # fmt: skip
    result = runner.invoke(qtomo_app, args)
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["trials"] == 2
    assert summary["config"]["seed"] == 3


def test_usage_and_config_errors(runner: CliRunner, tmp_path: Path) -> None:
    assert runner.invoke(qtomo_app, ["bench", "--trials", "0"]).exit_code == 1
    assert runner.invoke(qtomo_app, ["bench", "--estimators", "bayes", "--out", str(tmp_path)]).exit_code == 1
    assert runner.invoke(qtomo_app, ["bench", "--purity-band", "0.4"]).exit_code == 1
    assert runner.invoke(qtomo_app, ["ratio", "--sampler", "hs", "--out", str(tmp_path)]).exit_code == 1


def test_missing_prior_file(runner: CliRunner, tmp_path: Path) -> None:
    result = runner.invoke(qtomo_app, ["estimate", "--prior", str(tmp_path / "missing.json")])
    assert result.exit_code == 2


def test_failure_threshold_exit_code(runner: CliRunner, tmp_path: Path, mocker: MockerFixture) -> None:
    def failed_trial(config: object, trial_id: int, fixed_bases: object = None) -> TrialRecord:
        return TrialRecord(
            trial_id=trial_id,
            sampler="hs",
            true_purity=0.5,
            region_area=None,
            status=TrialStatus.ALL_NAN,
            distances={"random": TrialDistances()},
        )

    mocker.patch("qtomo.domain.bench.runner.run_trial", side_effect=failed_trial)
    result = runner.invoke(qtomo_app, ["bench", "--trials", "3", "--estimators", "random", "--out", str(tmp_path)])
    assert result.exit_code == 3
    assert (tmp_path / "trials.csv").exists()
