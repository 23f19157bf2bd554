"""qtomo exception types.

Every error raised on purpose derives from :class:`ApplicationError`. Errors
that reach the command line carry the process exit code to use.
"""

from __future__ import annotations

from typing import Any, ClassVar

__all__ = (
    "ApplicationError",
    "ConfigError",
    "DegenerateFrame",
    "DegenerateFutureMeasurement",
    "EnsembleTooSmall",
    "EstimationError",
    "InconsistentProbabilities",
    "InfeasibleRegionSuspected",
    "InvalidDensityMatrix",
    "InvalidEstimatorInput",
    "InvalidInteriorPoint",
    "InvalidOptimizerOptions",
    "InvalidPriorData",
    "InvalidSimplexPoint",
    "NonHermitianInput",
    "NonOrthonormalBasis",
    "OutputError",
    "RegionTooSmall",
    "SamplerError",
    "TrialFailureThresholdExceeded",
    "UnknownComponentError",
    "UnsupportedRegionDimension",
)


class ApplicationError(Exception):
    """Base exception type for the lib's custom exception types."""

    detail: str
    exit_code: ClassVar[int] = 1

    def __init__(self, *args: Any, detail: str = "") -> None:
        """Initialize ``ApplicationError``.

        Args:
            *args: args are converted to :class:`str` before passing to :class:`Exception`
            detail: detail of the exception.
        """
        str_args = [str(arg) for arg in args if arg]
        if not detail:
            if str_args:
                detail, *str_args = str_args
            elif hasattr(self, "detail"):
                detail = self.detail
        self.detail = detail
        super().__init__(*str_args)

    def __repr__(self) -> str:
        if self.detail:
            return f"{self.__class__.__name__} - {self.detail}"
        return self.__class__.__name__

    def __str__(self) -> str:
        return " ".join((*self.args, self.detail)).strip()


class NonHermitianInput(ApplicationError, ValueError):
    """A matrix handed to a Hermitian routine is not Hermitian."""


class InvalidDensityMatrix(ApplicationError, ValueError):
    """A matrix violates the Hermitian, unit-trace or positivity invariant."""


class InvalidSimplexPoint(ApplicationError, ValueError):
    """A probability vector has negative entries or does not sum to one."""


class InconsistentProbabilities(ApplicationError, ValueError):
    """A basis triple of measured probabilities does not sum to one."""


class NonOrthonormalBasis(ApplicationError, ValueError):
    """Basis kets are not orthonormal."""


class DegenerateFrame(ApplicationError, ValueError):
    """The frame matrix has rank below 8, so the bases do not span the states."""


class InvalidPriorData(ApplicationError, ValueError):
    """Measured and unmeasured bases do not partition the four bases."""


class UnsupportedRegionDimension(ApplicationError, ValueError):
    """The operation needs exactly one unmeasured basis."""


class InvalidInteriorPoint(ApplicationError, ValueError):
    """A point passed as interior of the region is not strictly feasible."""


class InvalidOptimizerOptions(ApplicationError, ValueError):
    """Line search or barrier parameters are out of range."""


class InvalidEstimatorInput(ApplicationError, ValueError):
    """An estimator argument such as a sample count is out of range."""


class EstimationError(ApplicationError):
    """Base exception type for estimation failures on a valid input."""


class InfeasibleRegionSuspected(EstimationError):
    """Ascent on the minimum eigenvalue did not reach the permissible region."""


class RegionTooSmall(EstimationError):
    """Neither rejection nor importance sampling found points of the region."""


class DegenerateFutureMeasurement(EstimationError):
    """The chosen future measurement adds no information to the prior."""


class EnsembleTooSmall(EstimationError):
    """More than half of the ensemble members failed."""


class UnknownComponentError(ApplicationError, LookupError):
    """No estimator or sampler is registered under the requested name."""


class SamplerError(ApplicationError):
    """A state sampler could not satisfy its purity band."""


class ConfigError(ApplicationError):
    """Invalid scenario configuration."""

    exit_code = 1


class OutputError(ApplicationError, OSError):
    """Reading or writing a file failed."""

    exit_code = 2


class TrialFailureThresholdExceeded(ApplicationError):
    """More than half of the benchmark trials were marked invalid."""

    exit_code = 3
