from __future__ import annotations

import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
from rich import get_console
from rich.table import Table

from qtomo.__metadata__ import __description__, __project__, __version__
from qtomo.lib.exceptions import ApplicationError

__all__ = ("qtomo_app",)

F = TypeVar("F", bound=Callable[..., Any])


class QtomoGroup(click.Group):
    """Click group mapping failures to the documented exit codes.

    Usage and configuration errors exit 1, file errors 2 and a benchmark with
    too many failed trials 3.
    """

    def main(self, *args: Any, **kwargs: Any) -> Any:  # type: ignore[override]
        kwargs["standalone_mode"] = False
        console = get_console()
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as exc:
            exc.show()
            sys.exit(1)
        except click.Abort:
            console.print("[red]Aborted.[/]")
            sys.exit(1)
        except ApplicationError as exc:
            console.print(f"[red]{exc.__class__.__name__}: {exc.detail}[/]")
            sys.exit(exc.exit_code)
        except OSError as exc:
            console.print(f"[red]I/O error: {exc}[/]")
            sys.exit(2)


def _csv_list(_: click.Context, __: click.Parameter, value: str | None) -> list[str] | None:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def _float_pair(_: click.Context, __: click.Parameter, value: str | None) -> list[float] | None:
    if value is None:
        return None
    try:
        lo, hi = (float(item) for item in value.split(","))
    except ValueError as exc:
        raise click.BadParameter("expected two comma separated numbers, e.g. 0.3333,0.5") from exc
    return [lo, hi]


def scenario_options(func: F) -> F:
    """Flags shared by ``bench`` and ``ratio``."""
    options = [
        click.option("--seed", help="Seed of the run", type=click.IntRange(0, 2**64 - 1), required=False),
        click.option("--trials", help="Number of trials", type=click.IntRange(min=1), required=False),
        click.option("--sampler", help="State sampler", type=click.STRING, required=False),
        click.option(
            "--purity-band",
            help="Keep states with purity in lo,hi",
            type=click.STRING,
            callback=_float_pair,
            required=False,
        ),
        click.option("--unmeasured", help="Unmeasured bases", type=click.Choice(["1", "2"]), required=False),
        click.option(
            "--estimators",
            help="Comma separated estimator names",
            type=click.STRING,
            callback=_csv_list,
            required=False,
        ),
        click.option(
            "--distances",
            help="Comma separated distance names",
            type=click.STRING,
            callback=_csv_list,
            required=False,
        ),
        click.option("--workers", help="Worker processes", type=click.IntRange(min=1), required=False),
        click.option(
            "--out", help="Output directory", type=click.Path(file_okay=False, path_type=Path), required=False
        ),
        click.option(
            "--config",
            "config_file",
            help="JSON scenario file; its fields override the flags",
            type=click.Path(dir_okay=False, path_type=Path),
            required=False,
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def prior_option(func: F) -> F:
    return click.option(
        "--prior",
        "prior_file",
        help="Prior-data JSON file",
        type=click.Path(dir_okay=False, path_type=Path),
        required=True,
    )(func)


def _build_scenario(config_file: Path | None, **flags: Any) -> Any:
    from qtomo.domain.bench import ScenarioConfig, load_scenario_overrides

    unmeasured = flags.pop("unmeasured", None)
    out = flags.pop("out", None)
    scenario = ScenarioConfig.from_settings(
        **flags,
        unmeasured_count=None if unmeasured is None else int(unmeasured),
        out_dir=None if out is None else str(out),
    )
    if config_file is not None:
        scenario = scenario.merge(load_scenario_overrides(config_file))
    return scenario


def _load_prior(prior_file: Path) -> Any:
    from qtomo.domain.measurement import PriorData
    from qtomo.lib.schema import PriorFile
    from qtomo.lib.serialization import read_json

    return PriorData.from_schema(read_json(prior_file, PriorFile))


def _summary_table(summary: Any) -> Table:
    title = f"{summary.valid_trials} of {summary.trials} trials valid, failure rate {summary.failure_rate:.3f}"
    table = Table(title=title)
    table.add_column("estimator")
    table.add_column("distance")
    table.add_column("mean", justify="right")
    table.add_column("stderr", justify="right")
    table.add_column("n", justify="right")
    for estimator, distances in summary.estimators.items():
        for distance, stats in distances.items():
            table.add_row(
                estimator,
                distance,
                "-" if stats.mean is None else f"{stats.mean:.4f}",
                "-" if stats.stderr is None else f"{stats.stderr:.4f}",
                str(stats.n),
            )
    return table


@click.group(cls=QtomoGroup, name=__project__, help=__description__)
@click.version_option(version=__version__, prog_name=__project__)
@click.pass_context
def qtomo_app(_: click.Context) -> None:
    """Configure logging for every command."""
    from qtomo.config import get_settings
    from qtomo.config.log import configure_logging

    configure_logging(get_settings().log)


@qtomo_app.command(name="bench", help="Run the estimator benchmark")
@scenario_options
def bench(config_file: Path | None, **flags: Any) -> None:
    """Run trials, write the per-trial CSV and summary JSON."""
    from qtomo.domain.bench import check_failure_rate, run_benchmark

    console = get_console()
    scenario = _build_scenario(config_file, **flags)
    console.rule(f"Benchmark: {scenario.trials} trials, sampler {scenario.sampler}")
    result = run_benchmark(scenario)
    console.print(_summary_table(result.summary))
    console.print(f"Wrote {result.trials_csv} and {result.summary_json}")
    check_failure_rate(result.summary)


@qtomo_app.command(name="ratio", help="Histogram distance / sqrt(area) ratios for a state class")
@scenario_options
@click.option("--bins", help="Histogram bins", type=click.IntRange(min=1), required=False)
def ratio(config_file: Path | None, bins: int | None, **flags: Any) -> None:
    from qtomo.domain.bench import check_failure_rate, ratio_analysis

    console = get_console()
    flags["sampler"] = flags.get("sampler") or "rank2"
    scenario = _build_scenario(config_file, **flags)
    console.rule(f"Ratio analysis: {scenario.trials} trials, sampler {scenario.sampler}")
    analysis = ratio_analysis(scenario, bins)
    table = Table(title="distance / sqrt(area)")
    table.add_column("estimator")
    table.add_column("n", justify="right")
    table.add_column("mode", justify="right")
    for name, histogram in analysis.histograms.items():
        table.add_row(name, str(histogram.ratios.size), f"{histogram.mode:.3f}")
    console.print(table)
    console.print(f"Wrote {analysis.histogram_csv}")
    check_failure_rate(analysis.result.summary)


@qtomo_app.command(name="estimate", help="Estimate the state from a prior-data file")
@prior_option
@click.option("--method", help="Estimator name", type=click.STRING, default="mvne", show_default=True)
@click.option("--seed", help="Seed for sampling estimators", type=click.IntRange(0, 2**64 - 1), default=0)
@click.option("--samples", help="Center-of-mass sample count", type=click.IntRange(min=1), required=False)
@click.option("--out", help="Write the estimate JSON here", type=click.Path(dir_okay=False, path_type=Path))
def estimate(prior_file: Path, method: str, seed: int, samples: int | None, out: Path | None) -> None:
    import numpy as np

    from qtomo.domain.estimators import Estimator
    from qtomo.lib.serialization import to_json, write_json

    prior = _load_prior(prior_file)
    kwargs: dict[str, Any] = {"n_samples": samples} if samples else {}
    result = Estimator.get_estimator(method, **kwargs).estimate(prior, np.random.default_rng(seed))
    schema = result.to_schema()
    if out is None:
        click.echo(to_json(schema).decode())
    else:
        get_console().print(f"Wrote {write_json(out, schema)}")


@qtomo_app.command(name="region", help="Write region plot data for one unmeasured basis")
@prior_option
@click.option(
    "--grid-n", help="Grid nodes per simplex edge", type=click.IntRange(min=2), default=101, show_default=True
)
@click.option("--angles", help="Boundary rays", type=click.IntRange(min=3), required=False)
@click.option("--out", help="CSV path", type=click.Path(dir_okay=False, path_type=Path), default=Path("region.csv"))
def region(prior_file: Path, grid_n: int, angles: int | None, out: Path) -> None:
    from qtomo.domain.bench import emit_region_plot_data

    get_console().print(f"Wrote {emit_region_plot_data(_load_prior(prior_file), grid_n, out, angles)}")


@qtomo_app.command(name="area", help="Counting-measure area of the permissible region")
@prior_option
@click.option("--samples", help="Monte Carlo samples", type=click.IntRange(min=1), required=False)
@click.option("--seed", help="Seed", type=click.IntRange(0, 2**64 - 1), default=0)
@click.option("--out", help="Write the area JSON here", type=click.Path(dir_okay=False, path_type=Path))
def area(prior_file: Path, samples: int | None, seed: int, out: Path | None) -> None:
    import numpy as np

    from qtomo.config import get_settings
    from qtomo.domain.metrics import region_area
    from qtomo.lib.serialization import to_json, write_json

    prior = _load_prior(prior_file)
    result = region_area(prior, samples or get_settings().bench.AREA_SAMPLES, np.random.default_rng(seed))
    if out is None:
        click.echo(to_json(result.to_schema()).decode())
    else:
        get_console().print(f"Wrote {write_json(out, result.to_schema())}")


@qtomo_app.command(name="boundary", help="Trace the region boundary to CSV")
@prior_option
@click.option("--angles", help="Boundary rays", type=click.IntRange(min=3), required=False)
@click.option("--out", help="CSV path", type=click.Path(dir_okay=False, path_type=Path), default=Path("boundary.csv"))
def boundary(prior_file: Path, angles: int | None, out: Path) -> None:
    from qtomo.config.constants import BOUNDARY_CSV_HEADER
    from qtomo.domain.bench import write_csv
    from qtomo.domain.region import trace_boundary

    mesh = trace_boundary(_load_prior(prior_file), angles)
    if mesh.on_simplex_edge.any():
        get_console().print(f"[yellow]{int(mesh.on_simplex_edge.sum())} rays ended on the simplex edge[/]")
    get_console().print(f"Wrote {write_csv(out, BOUNDARY_CSV_HEADER, mesh.rows())}")


@qtomo_app.command(name="sample", help="Sample true states to JSON")
@click.option("--sampler", help="State sampler", type=click.STRING, default="hs", show_default=True)
@click.option("--purity-band", help="lo,hi", type=click.STRING, callback=_float_pair, required=False)
@click.option("--count", help="Number of states", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--seed", help="Seed", type=click.IntRange(0, 2**64 - 1), default=0)
@click.option("--out", help="JSON path", type=click.Path(dir_okay=False, path_type=Path), default=Path("states.json"))
def sample(sampler: str, purity_band: list[float] | None, count: int, seed: int, out: Path) -> None:
    import numpy as np

    from qtomo.domain.sampling import SamplerSpec, StateSampler, purity
    from qtomo.lib.schema import SampledStateSchema
    from qtomo.lib.serialization import complex_to_pairs, write_json

    spec = SamplerSpec(kind=sampler, purity_band=None if purity_band is None else (purity_band[0], purity_band[1]))
    states = StateSampler.get_sampler(spec).sample_many(count, np.random.default_rng(seed))
    rows = [
        SampledStateSchema(index=i, sampler=sampler, purity=purity(rho), rho=complex_to_pairs(rho.matrix))
        for i, rho in enumerate(states)
    ]
    get_console().print(f"Wrote {write_json(out, rows)}")
