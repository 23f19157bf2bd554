from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from qtomo.domain.measurement import PriorData
from qtomo.domain.qcore import ComplexMatrix3, DensityMatrix, RealVector
from qtomo.domain.region import FeasiblePoint
from qtomo.lib.schema import EstimateSchema
from qtomo.lib.serialization import complex_to_pairs

__all__ = (
    "Estimate",
    "EstimateStatus",
    "fallback_estimate",
)


class EstimateStatus(StrEnum):
    CONVERGED = "Converged"
    BOUNDARY_OPTIMUM = "BoundaryOptimum"
    FALLBACK_MAX_MIN_EIG = "FallbackMaxMinEig"
    FAILED = "Failed"

    @property
    def is_failure(self) -> bool:
        """Treated as a failed estimator by the benchmark."""
        return self in {EstimateStatus.FALLBACK_MAX_MIN_EIG, EstimateStatus.FAILED}


@dataclass(frozen=True, kw_only=True)
class Estimate:
    point: RealVector
    """Unmeasured probabilities in the prior's coordinates."""
    rho: ComplexMatrix3
    """Candidate matrix at ``point``; positive semidefinite within 1e-8 unless the status is ``Failed``."""
    objective_value: float
    iterations: int
    status: EstimateStatus
    method_tag: str
    std_error: RealVector | None = None
    members: tuple[Estimate, ...] = ()
    """Per-basis estimates of an ensemble."""

    @classmethod
    def at_point(
        cls,
        prior: PriorData,
        point: RealVector,
        *,
        objective_value: float,
        iterations: int,
        status: EstimateStatus,
        method_tag: str,
        std_error: RealVector | None = None,
        members: tuple[Estimate, ...] = (),
    ) -> Estimate:
        candidate = prior.chart(point)
        return cls(
            point=np.asarray(point, dtype=np.float64),
            rho=(candidate + candidate.conj().T) / 2,
            objective_value=objective_value,
            iterations=iterations,
            status=status,
            method_tag=method_tag,
            std_error=std_error,
            members=members,
        )

    @property
    def min_eig(self) -> float:
        return float(np.linalg.eigvalsh(self.rho)[0])

    def state(self) -> DensityMatrix:
        """The estimate as a density matrix, round-off negative eigenvalues set to zero."""
        values, vectors = np.linalg.eigh(self.rho)
        values = np.clip(values, 0.0, None)
        return DensityMatrix.from_spectrum(values / values.sum(), vectors)

    def to_schema(self) -> EstimateSchema:
        return EstimateSchema(
            method=self.method_tag,
            point=[float(x) for x in self.point],
            rho=complex_to_pairs(self.rho),
            objective=None if np.isnan(self.objective_value) else float(self.objective_value),
            iterations=self.iterations,
            status=self.status.value,
            std_error=None if self.std_error is None else [float(x) for x in self.std_error],
        )


def fallback_estimate(prior: PriorData, best: FeasiblePoint, method_tag: str) -> Estimate:
    """The point of largest minimum eigenvalue, for regions too thin to optimize in."""
    return Estimate.at_point(
        prior,
        best.point,
        objective_value=best.min_eig,
        iterations=best.iterations,
        status=EstimateStatus.FALLBACK_MAX_MIN_EIG,
        method_tag=method_tag,
    )
