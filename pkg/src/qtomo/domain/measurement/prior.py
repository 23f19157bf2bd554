"""Prior data and the affine chart from unmeasured probabilities to candidate matrices."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from qtomo.config.constants import DIM, INPUT_SUM_TOL, N_BASES, N_OUTCOMES
from qtomo.domain.qcore import ComplexMatrix3, DensityMatrix, RealVector
from qtomo.lib.exceptions import DegenerateFutureMeasurement, InvalidPriorData, InvalidSimplexPoint

from .bases import OrthonormalBasis, born_probabilities
from .frame import Frame, canonical_frame, check_triples

if TYPE_CHECKING:
    from qtomo.lib.schema import PriorFile

    from .transform import AffineMap

__all__ = (
    "CandidateMap",
    "MeasuredProbabilities",
    "PriorData",
    "rho_of_unmeasured",
)


@dataclass(frozen=True, kw_only=True)
class MeasuredProbabilities:
    basis_index: int
    probs: RealVector

    def __post_init__(self) -> None:
        if not 0 <= self.basis_index < N_BASES:
            raise InvalidPriorData(detail=f"basis index {self.basis_index} outside 0..{N_BASES - 1}")
        probs = check_triples(self.probs)
        if probs.size != DIM:
            raise InvalidPriorData(detail=f"basis {self.basis_index} needs {DIM} probabilities, got {probs.size}")
        if np.any(probs < -INPUT_SUM_TOL):
            raise InvalidSimplexPoint(detail=f"negative probability {probs.min():.3e} in basis {self.basis_index}")
        probs = np.clip(probs, 0.0, None)
        probs = probs / probs.sum()
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)


@dataclass(frozen=True, kw_only=True)
class CandidateMap:
    """``rho(x) = base + sum_j x_j generators[j]``.

    Every candidate is Hermitian with unit trace whenever each coordinate triple sums to one.
    """

    base: ComplexMatrix3
    generators: ComplexMatrix3
    """``(n, 3, 3)`` Hermitian generators, one per coordinate."""

    def __call__(self, x: RealVector) -> ComplexMatrix3:
        return self.base + np.einsum("j,jab->ab", np.asarray(x, dtype=np.float64), self.generators)

    def batch(self, points: RealVector) -> ComplexMatrix3:
        """Candidates for an ``(k, n)`` array of coordinates, shape ``(k, 3, 3)``."""
        return self.base + np.einsum("kj,jab->kab", np.atleast_2d(points), self.generators)

    def pullback(self, amap: AffineMap) -> CandidateMap:
        """Chart in the coordinates ``q`` of ``amap``, where the old coordinates are ``V q + beta``."""
        generators = np.einsum("jk,jab->kab", amap.V, self.generators)
        base = self.base + np.einsum("j,jab->ab", amap.beta, self.generators)
        return CandidateMap(base=base, generators=generators)


def _frame_chart(frame: Frame, measured: Sequence[MeasuredProbabilities], unmeasured: Sequence[int]) -> CandidateMap:
    offsets = np.full(N_OUTCOMES, -1 / DIM)
    for entry in measured:
        offsets[DIM * entry.basis_index : DIM * (entry.basis_index + 1)] = entry.probs - 1 / DIM
    slots = [DIM * index + k for index in unmeasured for k in range(DIM)]
    base = np.eye(DIM, dtype=np.complex128) / DIM + np.einsum("k,kab->ab", frame.pinv @ offsets, frame.lambdas)
    generators = np.einsum("kj,kab->jab", frame.pinv[:, slots], frame.lambdas)
    return CandidateMap(base=base, generators=generators)


@dataclass(frozen=True, kw_only=True)
class PriorData:
    """Measured probabilities of some bases plus the bases left unmeasured.

    The free coordinates are the probabilities of ``coordinate_bases``, one
    triple per unmeasured basis. They start out as the frame's own unmeasured
    bases and change under :meth:`transformed`.
    """

    measured: tuple[MeasuredProbabilities, ...]
    unmeasured_indices: tuple[int, ...]
    frame: Frame = field(default_factory=canonical_frame)
    chart: CandidateMap = field(default=None)  # type: ignore[assignment]
    coordinate_bases: tuple[OrthonormalBasis, ...] = ()

    def __post_init__(self) -> None:
        measured_indices = [entry.basis_index for entry in self.measured]
        indices = sorted([*measured_indices, *self.unmeasured_indices])
        if indices != list(range(N_BASES)):
            raise InvalidPriorData(
                detail=f"measured {measured_indices} and unmeasured {list(self.unmeasured_indices)} "
                f"must cover bases 0..{N_BASES - 1} exactly once"
            )
        if len(self.unmeasured_indices) not in {1, 2}:
            raise InvalidPriorData(detail=f"1 or 2 unmeasured bases supported, got {len(self.unmeasured_indices)}")
        object.__setattr__(self, "measured", tuple(sorted(self.measured, key=lambda entry: entry.basis_index)))
        object.__setattr__(self, "unmeasured_indices", tuple(self.unmeasured_indices))
        if self.chart is None:
            object.__setattr__(self, "chart", _frame_chart(self.frame, self.measured, self.unmeasured_indices))
        if not self.coordinate_bases:
            bases = tuple(self.frame.bases[index] for index in self.unmeasured_indices)
            object.__setattr__(self, "coordinate_bases", bases)

    @property
    def m(self) -> int:
        """Number of unmeasured bases."""
        return len(self.unmeasured_indices)

    @property
    def n_coords(self) -> int:
        return DIM * self.m

    @classmethod
    def from_state(
        cls,
        rho: DensityMatrix,
        unmeasured: Sequence[int] = (0,),
        frame: Frame | None = None,
    ) -> PriorData:
        """Exact prior: Born probabilities of ``rho`` in every basis except ``unmeasured``."""
        frame = frame or canonical_frame()
        measured = tuple(
            MeasuredProbabilities(basis_index=index, probs=born_probabilities(rho, frame.bases[index]))
            for index in range(N_BASES)
            if index not in unmeasured
        )
        return cls(measured=measured, unmeasured_indices=tuple(unmeasured), frame=frame)

    @classmethod
    def from_schema(cls, data: PriorFile, frame: Frame | None = None) -> PriorData:
        measured = tuple(
            MeasuredProbabilities(basis_index=entry.basis, probs=np.asarray(entry.probs)) for entry in data.measured
        )
        return cls(measured=measured, unmeasured_indices=tuple(data.unmeasured), frame=frame or canonical_frame())

    def true_coordinates(self, rho: DensityMatrix) -> RealVector:
        """Probabilities of ``rho`` in the coordinate bases."""
        return np.concatenate([born_probabilities(rho, basis) for basis in self.coordinate_bases])

    def transformed(self, amap: AffineMap, bases: Sequence[OrthonormalBasis]) -> PriorData:
        """The same prior with coordinates taken as probabilities of ``bases``."""
        if amap.degenerate:
            raise DegenerateFutureMeasurement(detail="future bases add no information to the prior")
        return PriorData(
            measured=self.measured,
            unmeasured_indices=self.unmeasured_indices,
            frame=self.frame,
            chart=self.chart.pullback(amap),
            coordinate_bases=tuple(bases),
        )


def rho_of_unmeasured(p: RealVector, prior: PriorData) -> ComplexMatrix3:
    """Candidate matrix for unmeasured probabilities ``p``; may have negative eigenvalues."""
    x = check_triples(p)
    if x.size != prior.n_coords:
        raise InvalidSimplexPoint(detail=f"expected {prior.n_coords} unmeasured probabilities, got {x.size}")
    candidate = prior.chart(x)
    return (candidate + candidate.conj().T) / 2
