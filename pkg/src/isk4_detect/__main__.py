"""Command-line interface for isk4-detect.

Exit codes: ``0`` ISK4-free (or success), ``1`` ISK4 found (or a failed check), ``2`` input error,
``3`` internal error (a detector invariant broke; the input is not at fault).
Machine-readable output goes to stdout; diagnostics and logs go to stderr.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import NoReturn, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel

from . import __version__
from .backends import load_graph, write_edge_list
from .core import (
    CertificatePayload,
    Graph,
    GraphFormatError,
    Isk4Detector,
    OracleBudgetExceeded,
    verify_isk4,
)
from .core.errors import DetectorInvariantError, Isk4Error
from .generators import GenSpec, generate
from .harness import bench_csv, loglog_slope, run_bench, run_fuzz
from .oracle import OracleBudget, oracle_detect
from .utils.logging_config import configure_logging
from .utils.reporting import FuzzReporter, bench_table

EXIT_FREE = 0
EXIT_FOUND = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3

app = typer.Typer(
    name="isk4",
    help="isk4-detect: recognize induced subdivisions of K4 with verifiable certificates",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f"isk4-detect version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
) -> None:
    """isk4-detect: recognize induced subdivisions of K4."""


def _setup(verbose: bool) -> None:
    configure_logging(level=logging.DEBUG if verbose else logging.WARNING)


def _input_error(exc: BaseException, verbose: bool) -> NoReturn:
    if isinstance(exc, FileNotFoundError):
        err_console.print(f"[red]Error: File not found: {exc.filename}[/red]")
    else:
        err_console.print(f"[red]Error: {exc}[/red]")
    if verbose:
        err_console.print_exception()
    raise typer.Exit(EXIT_INPUT_ERROR)


def _read_graph(path: Path, format: Optional[str], verbose: bool) -> Graph:
    try:
        return load_graph(path, format)
    except (FileNotFoundError, IsADirectoryError, GraphFormatError, ValueError) as exc:
        _input_error(exc, verbose)


def _parse_numbers(text: str, name: str) -> list[float]:
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise typer.BadParameter(f"{name} must be a comma-separated list, got {text!r}") from None


FORMAT_OPTION = typer.Option(
    None,
    "--format",
    "-f",
    help="Input format: edgelist or dimacs (default: by file suffix)",
)
VERBOSE_OPTION = typer.Option(False, "--verbose", help="Debug logging and tracebacks on stderr")


@app.command()
def detect(
    file: Path = typer.Argument(..., help="Graph file to search"),
    format: Optional[str] = FORMAT_OPTION,
    output: str = typer.Option("json", "--output", "-o", help="Output style: json or text"),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Decide whether a graph contains an induced subdivision of K4.

    Example:
        isk4 detect graph.txt --output json
    """
    _setup(verbose)
    if output not in ("json", "text"):
        raise typer.BadParameter("--output must be json or text")
    g = _read_graph(file, format, verbose)
    try:
        result = Isk4Detector().detect(g)
    except DetectorInvariantError as exc:
        err_console.print(f"[red]Internal error: {exc}[/red]")
        if verbose:
            err_console.print_exception()
        raise typer.Exit(EXIT_INTERNAL_ERROR)
    except Isk4Error as exc:
        err_console.print(f"[red]Error: {exc}[/red]")
        if verbose:
            err_console.print_exception()
        raise typer.Exit(EXIT_INPUT_ERROR)

    payload = result.verdict.to_payload()
    if output == "json":
        typer.echo(payload.to_json())
    else:
        body = (
            f"vertices: {payload.vertices}\nstage: {result.stage}"
            if result.found
            else f"no induced subdivision of K4\nclaws examined: {result.stats.claws_examined}"
        )
        style = "red" if result.found else "green"
        console.print(Panel(body, title=f"[bold]{payload.verdict}[/bold]", border_style=style))
    raise typer.Exit(EXIT_FOUND if result.found else EXIT_FREE)


@app.command()
def verify(
    file: Path = typer.Argument(..., help="Graph file"),
    certificate: Path = typer.Argument(..., help="Certificate JSON file"),
    format: Optional[str] = FORMAT_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Check that a certificate induces a subdivision of K4 in the graph.

    Example:
        isk4 verify graph.txt certificate.json
    """
    _setup(verbose)
    g = _read_graph(file, format, verbose)
    try:
        payload = CertificatePayload.from_json(certificate.read_text(encoding="utf-8"))
    except (FileNotFoundError, IsADirectoryError, ValidationError) as exc:
        _input_error(exc, verbose)

    if payload.vertices is None:
        typer.echo("invalid: certificate carries no vertices")
        raise typer.Exit(EXIT_FOUND)
    if verify_isk4(g, payload.vertices):
        typer.echo("valid")
        raise typer.Exit(EXIT_FREE)
    typer.echo("invalid")
    raise typer.Exit(EXIT_FOUND)


@app.command()
def oracle(
    file: Path = typer.Argument(..., help="Graph file to search exhaustively"),
    format: Optional[str] = FORMAT_OPTION,
    max_n: int = typer.Option(
        16, "--max-n", envvar="ISK4_ORACLE_MAX_N", help="Largest graph the oracle accepts"
    ),
    max_subsets: int = typer.Option(1 << 20, "--max-subsets", help="Subset enumeration cap"),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Brute-force ISK4 search, for cross-checking small graphs.

    Example:
        ISK4_ORACLE_MAX_N=14 isk4 oracle graph.txt
    """
    _setup(verbose)
    g = _read_graph(file, format, verbose)
    try:
        verdict = oracle_detect(g, OracleBudget(max_n=max_n, max_subsets=max_subsets))
    except (OracleBudgetExceeded, ValidationError) as exc:
        _input_error(exc, verbose)
    payload = verdict.to_payload()
    typer.echo(payload.to_json())
    raise typer.Exit(EXIT_FOUND if payload.verdict == "isk4" else EXIT_FREE)


@app.command()
def gen(
    family: str = typer.Option(..., "--family", help="Instance family"),
    n: int = typer.Option(..., "--n", help="Instance size"),
    p: float = typer.Option(0.3, "--p", help="Edge probability where the family uses one"),
    seed: int = typer.Option(0, "--seed", help="64-bit seed"),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write here instead of stdout"
    ),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Generate a seeded instance in the edge-list format.

    Example:
        isk4 gen --family twin_wheel --n 6 --seed 1
    """
    _setup(verbose)
    try:
        spec = GenSpec.model_validate({"family": family, "n": n, "p": p, "seed": seed})
        g = generate(spec)
    except (ValidationError, ValueError) as exc:
        _input_error(exc, verbose)
    text = write_edge_list(g)
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        err_console.print(f"[green]✓[/green] {spec.family} n={g.n} m={g.m} saved to {output}")


@app.command()
def fuzz(
    trials: int = typer.Option(100, "--trials", help="Number of random graphs"),
    max_n: int = typer.Option(10, "--max-n", help="Largest trial graph"),
    oracle_max_n: int = typer.Option(
        16, "--oracle-max-n", envvar="ISK4_ORACLE_MAX_N", help="Largest graph the oracle accepts"
    ),
    p_grid: str = typer.Option(
        "0.1,0.2,0.3,0.4,0.5", "--p-grid", help="Comma-separated edge probabilities"
    ),
    seed: int = typer.Option(0, "--seed", help="Master seed"),
    workers: int = typer.Option(1, "--workers", help="Worker processes"),
    claws: Optional[int] = typer.Option(
        None, "--claws", help="Claws per trial given radar-level checks (default: every claw)"
    ),
    report: Optional[Path] = typer.Option(None, "--report", help="Write an HTML or JSON report"),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Differential run of the detector against the brute-force oracle.

    Example:
        isk4 fuzz --trials 100 --max-n 10 --seed 7
    """
    _setup(verbose)
    grid = _parse_numbers(p_grid, "--p-grid")
    try:
        budget = OracleBudget(max_n=oracle_max_n)
        result = run_fuzz(trials, max_n, grid, seed, workers, budget, claws_per_trial=claws)
    except (OracleBudgetExceeded, ValidationError, ValueError) as exc:
        _input_error(exc, verbose)

    for line in result.summary_lines():
        typer.echo(line)
    reporter = FuzzReporter(result)
    if verbose:
        reporter.to_console(console=err_console)
    if report is not None:
        if report.suffix == ".html":
            reporter.to_html(report)
        else:
            reporter.to_json(report)
        err_console.print(f"[green]✓[/green] Report saved to {report}")
    raise typer.Exit(EXIT_FREE if result.ok else EXIT_FOUND)


@app.command()
def bench(
    family: str = typer.Option("cubic_line", "--family", help="Instance family"),
    sizes: str = typer.Option("20,30,40", "--sizes", help="Comma-separated sizes"),
    reps: int = typer.Option(3, "--reps", help="Repetitions per size"),
    seed: int = typer.Option(0, "--seed", help="Master seed"),
    p: float = typer.Option(0.3, "--p", help="Edge probability where the family uses one"),
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """
    Median detection time per size, as CSV "family,n,median_ms".

    Example:
        isk4 bench --family cubic_line --sizes 20,40,60
    """
    _setup(verbose)
    size_list = [int(v) for v in _parse_numbers(sizes, "--sizes")]
    try:
        frame = run_bench(family, size_list, reps=reps, seed=seed, p=p)  # type: ignore[arg-type]
    except (ValidationError, ValueError) as exc:
        _input_error(exc, verbose)
    typer.echo(bench_csv(frame), nl=False)
    if verbose:
        slope = loglog_slope(frame) if len(frame) >= 2 else None
        err_console.print(bench_table(frame, slope))


if __name__ == "__main__":
    app()
