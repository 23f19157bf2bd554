from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

__all__ = (
    "BenchSettings",
    "LogSettings",
    "OptimizerSettings",
    "RegionSettings",
    "Settings",
    "get_settings",
)


class LogSettings(BaseSettings):
    """Logging config for the application."""

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", env_prefix="LOG_", extra="allow")

    LEVEL: int = 20
    """Stdlib log levels.

    Only emit logs at this level, or higher.
    """
    FORMAT: Literal["console", "json"] = "console"
    """Render structured logs for a terminal or as JSON lines."""


class OptimizerSettings(BaseSettings):
    """Defaults of the gradient and Newton ascent used by the estimators."""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", env_prefix="OPT_", case_sensitive=False, extra="allow"
    )

    ARMIJO_ALPHA: float = 0.25
    """Sufficient-increase fraction of the backtracking rule."""
    ARMIJO_BETA: float = 0.5
    """Step shrink factor of the backtracking rule."""
    BARRIER_T: float = 1e-4
    """Weight of the log barrier on the minimum eigenvalue."""
    GRAD_TOL: float = 1e-9
    """Gradient norm that ends gradient ascent."""
    MAX_ITERS: int = 5000
    HESSIAN_QUADFORM_TOL: float = 1e-9
    """Newton decrement that ends Newton ascent."""
    ACCEPT_GRAD_TOL: float = 1e-6
    """Gradient norm at which an estimator ascent that stagnates or runs out of iterations is accepted."""
    VALUE_RTOL: float = 1e-12
    """Relative objective gain per step below which an ascent counts as stagnating."""
    USE_NEWTON: bool = False
    CONTINUATION: bool = False
    """Run the barrier problem for 1e-2, 1e-3 and then ``BARRIER_T``."""
    FEASIBILITY_MARGIN: float = 1e-9
    """Minimum eigenvalue a starting point must reach to count as interior."""


class RegionSettings(BaseSettings):
    """Monte Carlo budgets for sampling the permissible region."""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", env_prefix="REGION_", case_sensitive=False, extra="allow"
    )

    REJECTION_BUDGET: int = 10_000_000
    """Total proposals allowed before giving up."""
    IMPORTANCE_TRIGGER: float = 1e-4
    """Acceptance rate below which importance sampling takes over."""
    PILOT_PROPOSALS: int = 100_000
    """Proposals drawn before the acceptance rate is judged."""
    CHUNK_SIZE: int = 50_000
    BOUNDARY_ANGLES: int = 1024


class BenchSettings(BaseSettings):
    """Benchmark defaults, overridden by CLI flags and scenario files."""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", env_prefix="BENCH_", case_sensitive=False, extra="allow"
    )

    TRIALS: int = 10_000
    COM_SAMPLES: int = 10_000
    AREA_SAMPLES: int = 20_000
    ENSEMBLE_BASES: int = 20
    OUT_DIR: Path = Path("results")
    WORKERS: int = 1
    """Process pool size; 1 runs trials in the calling process."""
    HISTOGRAM_BINS: int = 40


@dataclass
class Settings:
    log: LogSettings = field(default_factory=LogSettings)
    optimizer: OptimizerSettings = field(default_factory=OptimizerSettings)
    region: RegionSettings = field(default_factory=RegionSettings)
    bench: BenchSettings = field(default_factory=BenchSettings)

    @classmethod
    def from_env(cls, dotenv_filename: str = ".env") -> Settings:
        env_file = Path(f"{os.curdir}/{dotenv_filename}")
        if env_file.is_file():
            from dotenv import load_dotenv
            from rich import get_console

            get_console().print(f"[yellow]Loading environment configuration from {dotenv_filename}[/]")

            load_dotenv(env_file)
        return Settings()


@lru_cache(maxsize=1, typed=True)
def get_settings() -> Settings:
    return Settings.from_env()
