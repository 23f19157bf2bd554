from __future__ import annotations

import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path

import numpy as np
import structlog

from qtomo.config.constants import FAILURE_RATE_LIMIT, TRIAL_CSV_HEADER
from qtomo.lib.exceptions import TrialFailureThresholdExceeded
from qtomo.lib.schema import BenchmarkSummary, DistanceSummary
from qtomo.lib.serialization import write_json
from qtomo.lib.timer import sync_timed

from .config import ScenarioConfig
from .io import write_csv
from .trial import TrialRecord, TrialStatus, fixed_random_bases, run_trial

__all__ = (
    "BenchmarkResult",
    "SummaryTable",
    "check_failure_rate",
    "run_benchmark",
    "summarize",
)

logger = structlog.get_logger()

# summary distance name -> per-trial field
DISTANCE_FIELDS = {
    "hs": "d_hs",
    "fidelity": "fidelity",
    "relative_entropy": "d_relent",
    "angular": "d_angular",
    "ratio_sqrt_area": "ratio",
}


@dataclass(frozen=True, kw_only=True)
class SummaryTable:
    estimators: dict[str, dict[str, DistanceSummary]]
    failure_rate: float
    trials: int
    valid_trials: int

    def to_schema(self, config: ScenarioConfig, wall_time_seconds: float) -> BenchmarkSummary:
        return BenchmarkSummary(
            config=config.to_dict(),
            estimators=self.estimators,
            failure_rate=self.failure_rate,
            trials=self.trials,
            valid_trials=self.valid_trials,
            wall_time_seconds=wall_time_seconds,
        )


@dataclass(frozen=True, kw_only=True)
class BenchmarkResult:
    records: list[TrialRecord]
    summary: SummaryTable
    trials_csv: Path | None = None
    summary_json: Path | None = None


def _describe(values: Sequence[float]) -> DistanceSummary:
    finite = np.asarray([v for v in values if np.isfinite(v)], dtype=np.float64)
    if finite.size == 0:
        return DistanceSummary(mean=None, stderr=None, n=0)
    stderr = float(finite.std(ddof=1) / np.sqrt(finite.size)) if finite.size > 1 else None
    return DistanceSummary(mean=float(finite.mean()), stderr=stderr, n=int(finite.size))


def summarize(records: Sequence[TrialRecord], config: ScenarioConfig) -> SummaryTable:
    """Mean and standard error per estimator and distance over the valid trials."""
    valid = [record for record in records if record.status is TrialStatus.OK]
    distances = [*(d for d in ("hs", "fidelity", "relative_entropy") if d in config.distances), "angular"]
    if config.needs_area:
        distances.append("ratio_sqrt_area")
    table = {
        name: {
            distance: _describe([getattr(r.distances[name], DISTANCE_FIELDS[distance]) for r in valid])
            for distance in distances
        }
        for name in config.effective_estimators()
    }
    return SummaryTable(
        estimators=table,
        failure_rate=(len(records) - len(valid)) / len(records) if records else 0.0,
        trials=len(records),
        valid_trials=len(valid),
    )


def check_failure_rate(summary: SummaryTable) -> None:
    if summary.failure_rate > FAILURE_RATE_LIMIT:
        raise TrialFailureThresholdExceeded(
            detail=f"{summary.trials - summary.valid_trials} of {summary.trials} trials failed"
        )


@sync_timed
def run_benchmark(config: ScenarioConfig, write: bool = True) -> BenchmarkResult:
    """Run ``config.trials`` trials and write the per-trial CSV and the summary JSON.

    Trials run in a process pool when ``config.workers > 1``; records are folded
    in trial order either way, so the outputs do not depend on the pool size.
    """
    if config.unmeasured_count == 2 and "mse_random_basis" in config.estimators:
        logger.warning("estimator_dropped", estimator="mse_random_basis", reason="two unmeasured bases")
    start = time.perf_counter()
    task = partial(run_trial, config, fixed_bases=fixed_random_bases(config.seed, config.unmeasured_count))
    trial_ids = range(config.trials)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(task, trial_ids, chunksize=max(1, config.trials // (4 * config.workers))))
    else:
        records = [task(trial_id) for trial_id in trial_ids]
    summary = summarize(records, config)
    wall_time = time.perf_counter() - start
    logger.info(
        "benchmark_finished",
        trials=summary.trials,
        valid_trials=summary.valid_trials,
        failure_rate=summary.failure_rate,
        seconds=round(wall_time, 3),
    )
    if not write:
        return BenchmarkResult(records=records, summary=summary)
    trials_csv = write_csv(config.trials_path, TRIAL_CSV_HEADER, (row for r in records for row in r.rows()))
    summary_json = write_json(config.summary_path, summary.to_schema(config, wall_time))
    return BenchmarkResult(records=records, summary=summary, trials_csv=trials_csv, summary_json=summary_json)
