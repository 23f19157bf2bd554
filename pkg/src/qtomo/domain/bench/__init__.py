from .analysis import RatioAnalysis, RatioHistogram, barycentric_grid, emit_region_plot_data, ratio_analysis
from .config import DISTANCE_NAMES, ESTIMATOR_NAMES, ScenarioConfig, load_scenario_overrides
from .io import ensure_dir, write_csv
from .runner import BenchmarkResult, SummaryTable, check_failure_rate, run_benchmark, summarize
from .trial import (
    TrialDistances,
    TrialRecord,
    TrialStatus,
    fixed_random_bases,
    run_trial,
    trial_rng,
    unmeasured_bases,
)

__all__ = [
    "DISTANCE_NAMES",
    "ESTIMATOR_NAMES",
    "BenchmarkResult",
    "RatioAnalysis",
    "RatioHistogram",
    "ScenarioConfig",
    "SummaryTable",
    "TrialDistances",
    "TrialRecord",
    "TrialStatus",
    "barycentric_grid",
    "check_failure_rate",
    "emit_region_plot_data",
    "ensure_dir",
    "fixed_random_bases",
    "load_scenario_overrides",
    "ratio_analysis",
    "run_benchmark",
    "run_trial",
    "summarize",
    "trial_rng",
    "unmeasured_bases",
]
