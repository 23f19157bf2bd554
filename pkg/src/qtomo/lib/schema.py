from __future__ import annotations

from typing import Any

import msgspec

__all__ = (
    "AreaSchema",
    "BaseStruct",
    "BenchmarkSummary",
    "DistanceSummary",
    "EstimateSchema",
    "MeasuredEntry",
    "PriorFile",
    "SampledStateSchema",
)

ComplexPairs = list[list[list[float]]]
"""A 3x3 complex matrix as rows of ``[re, im]`` pairs."""


class BaseStruct(msgspec.Struct):
    def to_dict(self) -> dict[str, Any]:
        return {f: getattr(self, f) for f in self.__struct_fields__ if getattr(self, f, None) != msgspec.UNSET}


class MeasuredEntry(BaseStruct, forbid_unknown_fields=True):
    basis: int
    probs: list[float]


class PriorFile(BaseStruct, forbid_unknown_fields=True):
    """Prior-data file: measured triples plus the indices left unmeasured."""

    measured: list[MeasuredEntry]
    unmeasured: list[int]


class EstimateSchema(BaseStruct):
    method: str
    point: list[float]
    rho: ComplexPairs
    objective: float | None
    iterations: int
    status: str
    std_error: list[float] | None = None


class AreaSchema(BaseStruct):
    area: float
    std_error: float
    n: int
    acceptance: float
    zero_acceptance: bool = False


class SampledStateSchema(BaseStruct):
    index: int
    sampler: str
    purity: float
    rho: ComplexPairs


class DistanceSummary(BaseStruct):
    mean: float | None
    stderr: float | None
    n: int


class BenchmarkSummary(BaseStruct):
    config: dict[str, Any]
    estimators: dict[str, dict[str, DistanceSummary]]
    failure_rate: float
    trials: int
    valid_trials: int
    wall_time_seconds: float
