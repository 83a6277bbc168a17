"""CLI entry point for condquant"""

import logging
import os
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, NoReturn

import typer
from pydantic import ValidationError
from rich.console import Console

from . import __version__
from .allocation.solver import allocate_exhaustive, allocation_error
from .asymptotics.sequence import error_sequence_polygon, error_sequence_segment
from .config import Config
from .core.errors import (
    AllocationInfeasibleError,
    AllocationMismatchError,
    CondQuantError,
    SearchBudgetError,
)
from .core.partition import partition
from .core.rational import format_rational, parse_rational, parse_rational_list
from .core.types import SegmentProblem
from .oracle.boundary import boundary_discretization_error
from .oracle.exact import exact_distortion
from .oracle.grid import MAX_FREE_POINTS, grid_search
from .oracle.lloyd import lloyd_multi_seed
from .output import (
    OutputRecord,
    exact_value,
    polygon_points_frame,
    polygon_results,
    segment_points_frame,
    segment_results,
    write_scan_csv,
)
from .polygon.geometry import PolygonSpec
from .polygon.quantizer import polygon_coefficient, polygon_quantizer
from .segment.optimal import optimal_quantizer

logger = logging.getLogger(__name__)

LOG_ENV = "CONDQUANT_LOG_LEVEL"
LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_VERIFY_FAILED = 4

err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class Target(str, Enum):
    SEGMENT = "segment"
    POLYGON = "polygon"


@dataclass
class CliState:
    config: Config
    threads: int


def version_callback(value: bool):
    if value:
        print(f"condquant {__version__}")
        raise typer.Exit()


app = typer.Typer(
    name="condquant",
    help="Conditional optimal quantizers on segments and regular polygon boundaries",
    add_completion=False,
    no_args_is_help=True,
)


def _fail(exc: Exception) -> NoReturn:
    """One-line diagnostic on stderr, then the exit code for the error class."""
    if isinstance(exc, (AllocationInfeasibleError, AllocationMismatchError)):
        code = EXIT_INFEASIBLE
    else:
        code = EXIT_USAGE
    err_console.print(f"error: {exc}", style="red", markup=False, highlight=False, soft_wrap=True)
    raise typer.Exit(code)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=LOG_LEVELS[level],
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _segment_problem(a: str | None, b: str | None, beta: str | None) -> SegmentProblem:
    if a is None or b is None or beta is None:
        raise typer.BadParameter("--a, --b and --beta are required for a segment problem")
    return SegmentProblem.create(parse_rational(a), parse_rational(b), parse_rational_list(beta))


def _polygon_spec(m: int | None) -> PolygonSpec:
    if m is None:
        raise typer.BadParameter("--m is required for a polygon problem")
    return PolygonSpec(m)


def _emit(record: OutputRecord) -> None:
    typer.echo(record.to_json())


def _segment_inputs(problem: SegmentProblem, **extra: Any) -> dict[str, Any]:
    return {
        "a": format_rational(problem.a),
        "b": format_rational(problem.b),
        "beta": [format_rational(p) for p in problem.beta],
        **extra,
    }


@app.callback()
def main_callback(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version", "-V",
        callback=version_callback,
        is_eager=True,
        help="Print the version number and exit.",
    ),
    log_level: str = typer.Option(
        None,
        "--log-level",
        help="Log level (error, warn, info, debug).",
    ),
    config_path: Path = typer.Option(
        None,
        "--config",
        help="Path to a JSON config file.",
    ),
    threads: int = typer.Option(
        None,
        "--threads",
        min=1,
        help="Worker threads for multi-seed oracles.",
    ),
):
    """Conditional optimal quantizers on segments and regular polygon boundaries"""
    try:
        config = Config.load(config_path)
    except (ValidationError, ValueError) as e:
        err_console.print(f"error: invalid config: {e}".splitlines()[0], style="red", markup=False, soft_wrap=True)
        raise typer.Exit(EXIT_USAGE)

    level = (log_level or os.environ.get(LOG_ENV) or config.run.log_level).lower()
    if level not in LOG_LEVELS:
        raise typer.BadParameter(f"Unknown log level {level!r}", param_hint="--log-level")
    _configure_logging(level)

    ctx.obj = CliState(config=config, threads=threads or config.run.threads)


@app.command()
def segment(
    a: str = typer.Option(..., "--a", help="Left support endpoint, p/q or integer."),
    b: str = typer.Option(..., "--b", help="Right support endpoint, p/q or integer."),
    beta: str = typer.Option(..., "--beta", help="Conditional set, comma-separated rationals."),
    n: int = typer.Option(..., "--n", help="Number of quantizer points."),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or csv."),
):
    """Conditional optimal n-point quantizer on [a, b] with conditional set beta"""
    try:
        problem = _segment_problem(a, b, beta)
        result = optimal_quantizer(problem, n)
    except CondQuantError as e:
        _fail(e)

    if fmt is OutputFormat.CSV:
        typer.echo(segment_points_frame(result).to_csv(index=False), nl=False)
        return
    _emit(OutputRecord(command="segment", inputs=_segment_inputs(problem, n=n), results=segment_results(result)))


@app.command()
def polygon(
    m: int = typer.Option(..., "--m", help="Number of polygon sides."),
    n: int = typer.Option(..., "--n", help="Number of quantizer points."),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="json or csv."),
):
    """Conditional optimal n-point quantizer on the boundary of the regular m-gon"""
    try:
        spec = _polygon_spec(m)
        quantizer = polygon_quantizer(spec, n)
        coefficient = polygon_coefficient(spec)
    except CondQuantError as e:
        _fail(e)

    if fmt is OutputFormat.CSV:
        typer.echo(polygon_points_frame(quantizer, coefficient).to_csv(index=False), nl=False)
        return
    _emit(OutputRecord(command="polygon", inputs={"m": m, "n": n}, results=polygon_results(quantizer, coefficient)))


@app.command()
def scan(
    target: Target = typer.Option(..., "--target", help="segment or polygon."),
    out: Path = typer.Option(..., "--out", help="CSV output path."),
    n_max: int = typer.Option(..., "--n-max", help="Largest n."),
    n_min: int = typer.Option(None, "--n-min", help="Smallest n (default: minimal feasible n)."),
    a: str = typer.Option(None, "--a"),
    b: str = typer.Option(None, "--b"),
    beta: str = typer.Option(None, "--beta"),
    m: int = typer.Option(None, "--m"),
):
    """Error sequence V_n with n^2 V_n and dimension estimates, written as CSV"""
    try:
        with err_console.status(f"Scanning {target.value} up to n={n_max}"):
            if target is Target.SEGMENT:
                seq = error_sequence_segment(_segment_problem(a, b, beta), n_max, n_min)
            else:
                seq = error_sequence_polygon(_polygon_spec(m), n_max, n_min)
    except CondQuantError as e:
        _fail(e)

    write_scan_csv(seq, out)
    err_console.print(f"Wrote {len(seq)} rows to {out}", markup=False, highlight=False, soft_wrap=True)


def _verify_segment(state: CliState, problem: SegmentProblem, n: int, seeds: int) -> dict[str, Any]:
    config = state.config
    result = optimal_quantizer(problem, n)
    closed = result.error
    integrated = exact_distortion(problem, result.points)
    oracles: dict[str, Any] = {"exact_integration": exact_value(integrated)}

    free = n - problem.min_n
    if free == 0:
        best, best_name = float(integrated), "exact_integration"
    else:
        lloyd_best, runs = lloyd_multi_seed(
            problem,
            result.allocation,
            seeds=seeds,
            tol=config.lloyd.tol,
            max_iter=config.lloyd.max_iter,
            threads=state.threads,
        )
        oracles["lloyd"] = {
            "error": lloyd_best.error,
            "seed": lloyd_best.seed,
            "iterations": lloyd_best.iterations,
            "converged": all(r.converged for r in runs),
            "seeds": len(runs),
        }
        best, best_name = lloyd_best.error, "lloyd"

        if free <= MAX_FREE_POINTS:
            grid = grid_search(
                problem,
                n,
                step=config.grid.step,
                refine_tol=config.grid.refine_tol,
                max_candidates=config.grid.max_candidates,
            )
            oracles["grid"] = {"error": grid.error, "grid_step": grid.grid_step, "candidates": grid.candidates}
            if grid.error < best:
                best, best_name = grid.error, "grid"

    allocation_ok = integrated == closed
    try:
        subs = partition(problem)
        exhaustive = allocate_exhaustive(subs, n, cap=config.run.exhaustive_cap)
        allocation_ok = allocation_ok and allocation_error(subs, exhaustive) == closed
        oracles["exhaustive_allocation"] = {
            "allocation": list(exhaustive.counts),
            "error": exact_value(allocation_error(subs, exhaustive)),
        }
    except SearchBudgetError as e:
        logger.info(f"Skipping exhaustive allocation check: {e}")

    closed_float = float(closed)
    gap = abs(closed_float - best) / closed_float
    passed = gap <= config.tolerance.segment_rel and allocation_ok
    return {
        "closed_form_error": exact_value(closed),
        "allocation": list(result.allocation.counts),
        "oracle_error": best,
        "oracle": best_name,
        "oracles": oracles,
        "relative_gap": gap,
        "tolerance": config.tolerance.segment_rel,
        "passed": passed,
    }


def _verify_polygon(state: CliState, spec: PolygonSpec, n: int, samples: int) -> dict[str, Any]:
    config = state.config
    quantizer = polygon_quantizer(spec, n)
    oracle = boundary_discretization_error(spec, quantizer.points_array(), samples=samples, chunk=config.boundary.chunk)
    gap = abs(quantizer.error - oracle)
    return {
        "closed_form_error": quantizer.error,
        "side_counts": list(quantizer.side_counts),
        "oracle_error": oracle,
        "oracle": "boundary_discretization",
        "absolute_gap": gap,
        "relative_gap": gap / quantizer.error,
        "tolerance": config.tolerance.polygon_abs,
        "passed": gap <= config.tolerance.polygon_abs,
    }


@app.command()
def verify(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Number of quantizer points."),
    target: Target = typer.Option(Target.SEGMENT, "--target", help="segment or polygon."),
    a: str = typer.Option(None, "--a"),
    b: str = typer.Option(None, "--b"),
    beta: str = typer.Option(None, "--beta"),
    m: int = typer.Option(None, "--m"),
    seeds: int = typer.Option(None, "--seeds", min=1, help="Lloyd seeds (segment)."),
    samples: int = typer.Option(None, "--samples", min=10_000, help="Boundary samples (polygon)."),
):
    """Compare the closed-form quantizer error against numerical oracles"""
    state: CliState = ctx.obj
    try:
        if target is Target.SEGMENT:
            problem = _segment_problem(a, b, beta)
            inputs = _segment_inputs(problem, n=n, seeds=seeds or state.config.lloyd.seeds)
            with err_console.status(f"Verifying segment n={n}"):
                results = _verify_segment(state, problem, n, seeds or state.config.lloyd.seeds)
        else:
            spec = _polygon_spec(m)
            inputs = {"m": m, "n": n, "samples": samples or state.config.boundary.samples}
            with err_console.status(f"Verifying polygon m={m} n={n}"):
                results = _verify_polygon(state, spec, n, samples or state.config.boundary.samples)
    except CondQuantError as e:
        _fail(e)

    _emit(OutputRecord(command="verify", inputs=inputs, results=results))
    if not results["passed"]:
        err_console.print(
            f"verification failed: relative gap {results['relative_gap']:.3e}",
            style="red",
            markup=False,
            highlight=False,
            soft_wrap=True,
        )
        raise typer.Exit(EXIT_VERIFY_FAILED)
