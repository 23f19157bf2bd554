"""Counting-measure area of the permissible region and the search for the future measurement that maximizes it."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import structlog

from qtomo.config import get_settings
from qtomo.config.constants import AREA_DIRICHLET_ALPHA, DIM, MIN_AREA_SAMPLES, MIN_CANDIDATES
from qtomo.domain.measurement import OrthonormalBasis, PriorData, future_transform
from qtomo.domain.region import membership_batch
from qtomo.domain.sampling import haar_unitary
from qtomo.lib.exceptions import InvalidEstimatorInput, UnsupportedRegionDimension
from qtomo.lib.schema import AreaSchema
from qtomo.lib.timer import sync_timed

__all__ = (
    "AreaResult",
    "MeasurementChoice",
    "counting_multiplier",
    "region_area",
    "search_best_measurement",
)

logger = structlog.get_logger()

OCTANT_AREA = np.pi / 2


@dataclass(frozen=True, kw_only=True)
class AreaResult:
    area: float
    std_error: float
    n_samples: int
    acceptance_rate: float
    zero_acceptance: bool = False
    """No proposal was accepted; ``std_error`` is then the rule-of-three bound."""

    def to_schema(self) -> AreaSchema:
        return AreaSchema(
            area=self.area,
            std_error=self.std_error,
            n=self.n_samples,
            acceptance=self.acceptance_rate,
            zero_acceptance=self.zero_acceptance,
        )


def counting_multiplier(observations: int, m: int) -> float:
    """``(N^{3/2} / 2^{3/2})^m``, the prefactor for ``N`` observations per basis."""
    return float((observations**1.5 / 2**1.5) ** m)


@sync_timed
def region_area(
    prior: PriorData,
    n: int,
    rng: np.random.Generator,
    observations: int | None = None,
) -> AreaResult:
    """Monte Carlo area of the region under the counting measure ``dp / sqrt(p1 p2 p3)``.

    Dirichlet(1/2) proposals have exactly the normalized counting density, so the
    acceptance rate times ``(pi/2)^m`` is unbiased for the area.
    """
    if n < MIN_AREA_SAMPLES:
        raise InvalidEstimatorInput(detail=f"area needs at least {MIN_AREA_SAMPLES} samples, got {n}")
    chunk = get_settings().region.CHUNK_SIZE
    accepted = 0
    for start in range(0, n, chunk):
        size = min(chunk, n - start)
        proposals = rng.dirichlet(np.full(DIM, AREA_DIRICHLET_ALPHA), size=(size, prior.m)).reshape(size, -1)
        accepted += int(membership_batch(proposals, prior).sum())
    scale = OCTANT_AREA**prior.m * (counting_multiplier(observations, prior.m) if observations else 1.0)
    rate = accepted / n
    if accepted == 0:
        return AreaResult(area=0.0, std_error=scale * 3.0 / n, n_samples=n, acceptance_rate=0.0, zero_acceptance=True)
    return AreaResult(
        area=rate * scale,
        std_error=scale * float(np.sqrt(rate * (1 - rate) / n)),
        n_samples=n,
        acceptance_rate=rate,
    )


@dataclass(frozen=True, kw_only=True)
class MeasurementChoice:
    basis: OrthonormalBasis
    area: AreaResult
    index: int
    """Position of the winner among the candidates; 0 is the remaining canonical basis."""
    areas: list[float] = field(default_factory=list)


def search_best_measurement(
    prior: PriorData,
    n_candidates: int,
    rng: np.random.Generator,
    n_samples: int | None = None,
    candidates: Sequence[OrthonormalBasis] | None = None,
) -> MeasurementChoice:
    """Future basis whose region has the largest area.

    Candidates are the prior's own unmeasured basis followed by ``n_candidates``
    Haar-random bases, unless ``candidates`` is given. Every candidate is scored
    on the same proposals and ties go to the earlier candidate.
    """
    if prior.m != 1:
        raise UnsupportedRegionDimension(detail=f"measurement search needs one unmeasured basis, got {prior.m}")
    if candidates is None:
        if n_candidates < MIN_CANDIDATES:
            raise InvalidEstimatorInput(
                detail=f"at least {MIN_CANDIDATES} random candidates needed, got {n_candidates}",
            )
        candidates = [prior.coordinate_bases[0]] + [
            OrthonormalBasis(kets=haar_unitary(rng)) for _ in range(n_candidates)
        ]
    n_samples = n_samples or get_settings().bench.AREA_SAMPLES
    proposal_seed = int(rng.integers(2**63))
    results = []
    for basis in candidates:
        amap = future_transform(prior, [basis])
        if amap.degenerate:
            results.append(
                AreaResult(area=0.0, std_error=0.0, n_samples=n_samples, acceptance_rate=0.0, zero_acceptance=True)
            )
            continue
        results.append(region_area(prior.transformed(amap, [basis]), n_samples, np.random.default_rng(proposal_seed)))
    areas = [result.area for result in results]
    best = int(np.argmax(areas))
    logger.debug("measurement_search_finished", candidates=len(areas), winner=best, area=areas[best])
    return MeasurementChoice(basis=candidates[best], area=results[best], index=best, areas=areas)
