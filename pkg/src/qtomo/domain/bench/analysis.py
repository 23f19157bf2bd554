"""Ratio histograms for state classes and region plot data."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import structlog

from qtomo.config import get_settings
from qtomo.config.constants import DIM, REGION_CSV_HEADER
from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import RealVector
from qtomo.domain.region import det_field, membership_batch, min_eig_batch, trace_boundary
from qtomo.lib.exceptions import ConfigError, InvalidInteriorPoint, UnsupportedRegionDimension

from .config import ScenarioConfig
from .io import write_csv
from .runner import BenchmarkResult, run_benchmark
from .trial import TrialStatus

__all__ = (
    "RATIO_CSV_HEADER",
    "RatioAnalysis",
    "RatioHistogram",
    "barycentric_grid",
    "emit_region_plot_data",
    "ratio_analysis",
)

logger = structlog.get_logger()

RATIO_CSV_HEADER = ("estimator", "bin_lo", "bin_hi", "count")
STATE_CLASS_SAMPLERS = ("rank2", "pure")


@dataclass(frozen=True, kw_only=True)
class RatioHistogram:
    ratios: RealVector
    edges: RealVector
    counts: RealVector

    @property
    def mode(self) -> float:
        """Center of the fullest bin."""
        if not self.counts.any():
            return float("nan")
        best = int(np.argmax(self.counts))
        return float((self.edges[best] + self.edges[best + 1]) / 2)


@dataclass(frozen=True, kw_only=True)
class RatioAnalysis:
    result: BenchmarkResult
    histograms: dict[str, RatioHistogram]
    histogram_csv: Path | None = None


def _is_state_class(config: ScenarioConfig) -> bool:
    highly_mixed = config.purity_band is not None and config.purity_band[1] <= 0.5
    return config.sampler in STATE_CLASS_SAMPLERS or highly_mixed


def ratio_analysis(config: ScenarioConfig, bins: int | None = None, write: bool = True) -> RatioAnalysis:
    """Angular distance over the square root of the region area, per estimator, with shared histogram bins.

    Only state classes are accepted: rank-2, pure, or a purity band at or below one half.
    """
    if not _is_state_class(config):
        raise ConfigError(detail="ratio analysis needs the rank2 or pure sampler, or a purity band below 0.5")
    if not config.needs_area:
        config = config.merge({"distances": [*config.distances, "ratio_sqrt_area"]})
    bins = bins or get_settings().bench.HISTOGRAM_BINS
    result = run_benchmark(config, write=write)
    valid = [record for record in result.records if record.status is TrialStatus.OK]
    ratios = {
        name: np.asarray([r.distances[name].ratio for r in valid if np.isfinite(r.distances[name].ratio)])
        for name in config.effective_estimators()
    }
    pooled = np.concatenate(list(ratios.values())) if ratios else np.empty(0)
    edges = np.histogram_bin_edges(pooled if pooled.size else np.zeros(1), bins=bins)
    histograms = {
        name: RatioHistogram(ratios=values, edges=edges, counts=np.histogram(values, bins=edges)[0])
        for name, values in ratios.items()
    }
    histogram_csv = None
    if write:
        rows = [
            {"estimator": name, "bin_lo": float(lo), "bin_hi": float(hi), "count": int(count)}
            for name, histogram in histograms.items()
            for lo, hi, count in zip(histogram.edges[:-1], histogram.edges[1:], histogram.counts, strict=True)
        ]
        histogram_csv = write_csv(Path(config.out_dir) / "ratio_histogram.csv", RATIO_CSV_HEADER, rows)
    return RatioAnalysis(result=result, histograms=histograms, histogram_csv=histogram_csv)


def barycentric_grid(grid_n: int) -> RealVector:
    """Points ``(i, j, k) / (grid_n - 1)`` with ``i + j + k = grid_n - 1``."""
    steps = grid_n - 1
    nodes = [(i, j, steps - i - j) for i in range(grid_n) for j in range(grid_n - i)]
    return np.asarray(nodes, dtype=np.float64) / steps


def emit_region_plot_data(prior: PriorData, grid_n: int, path: Path, n_angles: int | None = None) -> Path:
    """Write the barycentric grid with minimum eigenvalue, determinant and feasibility, then the boundary mesh."""
    if prior.m != 1:
        raise UnsupportedRegionDimension(detail=f"region plots need one unmeasured basis, got {prior.m}")
    if grid_n < 2:
        raise ConfigError(detail=f"grid_n must be at least 2, got {grid_n}")
    grid = barycentric_grid(grid_n)
    rows = _rows("grid", grid, prior)
    try:
        mesh = trace_boundary(prior, n_angles)
    except InvalidInteriorPoint as exc:
        logger.warning("boundary_skipped", reason=exc.detail)
    else:
        rows.extend(_rows("boundary", mesh.points, prior))
    return write_csv(path, REGION_CSV_HEADER, rows)


def _rows(kind: str, points: RealVector, prior: PriorData) -> list[dict[str, object]]:
    min_eig = min_eig_batch(points, prior)
    det = det_field(points, prior)
    feasible = membership_batch(points, prior)
    return [
        {
            "kind": kind,
            **{f"p{k + 1}": float(p[k]) for k in range(DIM)},
            "min_eig": float(e),
            "det": float(d),
            "feasible": bool(f),
        }
        for p, e, d, f in zip(points, min_eig, det, feasible, strict=True)
    ]
