"""CLI entry point."""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from .. import __version__
from ..core.chebyshev import ChebKind, chebyshev_matrix
from ..core.combinatorics import catalan_triangle_even_matrix, catalan_triangle_odd_matrix, pyramidal_row
from ..core.config import FORMATS, Settings, load_config
from ..core.errors import ConjectureViolation, Mismatch, NetworkError, NotAvailableOffline, ParseError
from ..core.factor import (
    FIXED_POINT_ITEMS,
    build_factor_table,
    extract_psi,
    golden_fixed_points,
    phi_evaluations,
    pyramidal_column_report,
    run_conjecture_battery,
)
from ..core.fourier import l_matrix, super_catalan_matrix
from ..core.oeis import GENERATORS, OeisClient, crosscheck, parse_oeis_id
from ..core.spread import spread_matrix, zpread_matrix
from ..core.suites import run_suite, suite_names
from ..utils.render import render

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_FAILURE = 1

OBJECTS = ("T", "U", "P", "V", "S", "Z", "Beven", "Bodd", "M", "L", "pyramidal", "phi-table")


@dataclass
class RunConfig:
    """Options of one invocation after merging config file and flags."""

    subcommand: str
    size: int
    max_n: int
    format: str
    offline: bool
    workers: int

    def validate(self) -> None:
        if self.size < 1:
            raise click.BadParameter(f"size/order must be >= 1, got {self.size}")
        if self.max_n < 1:
            raise click.BadParameter(f"max-n must be >= 1, got {self.max_n}")
        if self.workers < 1:
            raise click.BadParameter(f"workers must be >= 1, got {self.workers}")
        if self.format not in FORMATS:
            raise click.BadParameter(f"format must be one of {FORMATS}, got {self.format!r}")


def _setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _run_config(ctx: click.Context, subcommand: str, size: Optional[int] = None,
                max_n: Optional[int] = None, fmt: Optional[str] = None,
                offline: Optional[bool] = None) -> RunConfig:
    settings: Settings = ctx.obj["settings"]
    config = RunConfig(
        subcommand=subcommand,
        size=size if size is not None else settings.order,
        max_n=max_n if max_n is not None else settings.max_n,
        format=fmt if fmt is not None else settings.format,
        offline=offline if offline is not None else settings.oeis.offline,
        workers=ctx.obj["workers"] or settings.workers,
    )
    config.validate()
    logger.debug(f"Run config: {config}")
    return config


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="YAML configuration file")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Threads for independent checks")
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log progress to stderr")
@click.pass_context
def cli(ctx, config_path, workers, verbose):
    """Exact trigonometric base changes and spread polynomial checks."""
    try:
        settings = load_config(config_path)
    except ValueError as e:
        raise click.UsageError(f"invalid configuration: {e}")
    _setup_logging("DEBUG" if verbose else settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    ctx.obj["workers"] = workers


# gen

def _triangular(rows: List[List[int]], upper: bool, parity: bool = False) -> List[List[Optional[int]]]:
    """Replace entries outside the triangle (and off-parity entries) with None."""
    out = []
    for i, row in enumerate(rows):
        cells: List[Optional[int]] = []
        for j, value in enumerate(row):
            outside = i > j if upper else j > i
            if outside or (parity and (i - j) % 2):
                cells.append(None)
            else:
                cells.append(value)
        out.append(cells)
    return out


def _cheb_rows(kind: str) -> Callable[[int], List[List[Optional[int]]]]:
    return lambda n: _triangular(chebyshev_matrix(ChebKind(kind), n).rows(), upper=True, parity=True)


_TABLES: Dict[str, Callable[[int], List[List[Optional[int]]]]] = {
    "T": _cheb_rows("T"),
    "U": _cheb_rows("U"),
    "P": _cheb_rows("P"),
    "V": _cheb_rows("V"),
    "S": lambda n: _triangular(spread_matrix(n), upper=True),
    "Z": lambda n: _triangular(zpread_matrix(n), upper=True),
    "Beven": lambda n: _triangular(catalan_triangle_even_matrix(n), upper=False),
    "Bodd": lambda n: _triangular(catalan_triangle_odd_matrix(n), upper=False),
    "M": lambda n: super_catalan_matrix(n).rows(),
    "L": lambda n: _triangular(l_matrix(n), upper=False),
}


def generate_rows(obj: str, size: int, columns: int = 10) -> Tuple[List[Sequence], Optional[List[str]]]:
    """Rows and optional header for a gen object."""
    if obj == "pyramidal":
        return [pyramidal_row(i, columns) for i in range(1, size + 1)], None
    if obj == "phi-table":
        table = extract_psi(build_factor_table(size))
        return [[d, text] for d, text in table.rows()], ["d", "Phi_d"]
    return _TABLES[obj](size), None


@cli.command()
@click.option("--object", "obj", type=click.Choice(OBJECTS), required=True, help="Table to print")
@click.option("--size", type=int, default=None, help="Matrix size, pyramidal rows or phi-table max n")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Output format")
@click.option("--columns", type=click.IntRange(min=1), default=10, help="Columns for pyramidal rows")
@click.pass_context
def gen(ctx, obj, size, fmt, columns):
    """Print a coefficient matrix or table."""
    config = _run_config(ctx, "gen", size=size if size is not None else 8, fmt=fmt)
    rows, header = generate_rows(obj, config.size, columns)
    click.echo(render(rows, config.format, name=obj, header=header), nl=False)


# verify

@cli.command()
@click.option("--suite", type=click.Choice(suite_names() + ["all"]), default="all", help="Suite to run")
@click.option("--order", type=int, default=None, help="Truncation order / size")
@click.pass_context
def verify(ctx, suite, order):
    """Run a verification suite."""
    config = _run_config(ctx, "verify", size=order)
    results = run_suite(suite, config.size, config.workers)

    table = Table(title=f"Verification at order {config.size}")
    table.add_column("Suite", style="cyan")
    table.add_column("Check")
    table.add_column("Result", justify="center")
    table.add_column("Comparisons", justify="right")
    for result in results:
        for report in result.reports:
            status = "[green]pass[/green]" if report.passed else (
                "[yellow]not tested[/yellow]" if not report.failures else "[red]FAIL[/red]")
            table.add_row(result.suite, report.name, status, str(report.checked))
    console.print(table)

    failed = [(r.suite, report) for r in results for report in r.failed]
    for suite_name, report in failed:
        console.print(f"[red]✗ {suite_name}/{report.name}[/red] ({report.anchor})")
        console.print(f"  first counterexample: {report.failures[0]}")
    if failed:
        sys.exit(EXIT_FAILURE)
    console.print("[green]✓ all checks passed[/green]")


# factor

@cli.command()
@click.option("--max-n", "max_n", type=int, default=None, help="Largest n of Z_n to factor")
@click.option("--report-pyramidal", is_flag=True, default=False,
              help="Append the pyramidal-column comparison")
@click.option("--evaluations", is_flag=True, default=False,
              help="Append Phi_n(x) at x = 0..4")
@click.pass_context
def factor(ctx, max_n, report_pyramidal, evaluations):
    """Factor Z_n into Phi_d and run the conjecture battery."""
    config = _run_config(ctx, "factor", max_n=max_n)
    try:
        table = extract_psi(build_factor_table(config.max_n))
    except ConjectureViolation as e:
        console.print(f"[red]✗ {e}[/red]")
        sys.exit(EXIT_FAILURE)

    for d, text in table.rows():
        click.echo(f"Φ{_subscript(d)} = {text}")

    battery = run_conjecture_battery(table)
    console.print()
    for line in battery.summary_lines():
        console.print(line)

    if report_pyramidal:
        console.print()
        console.print("[bold]Pyramidal columns[/bold] (|ψ_d| from the leading coefficient)")
        for row in pyramidal_column_report(table):
            where = ", ".join(str(k) for k in row.mismatches) or "none"
            console.print(f"d={row.d} column {row.column_index}: ψ {list(row.psi_coeffs)} "
                          f"vs {list(row.column)}; mismatches at {where}")

    if evaluations:
        console.print()
        evals = phi_evaluations(table)
        rows = [[n] + values for n, values in evals.items()]
        click.echo(render(rows, "plain", header=["n", "x=0", "x=1", "x=2", "x=3", "x=4"]), nl=False)

    if not battery.passed:
        for violation in battery.violations:
            console.print(f"[red]✗ {violation}[/red]")
        sys.exit(EXIT_FAILURE)


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _subscript(n: int) -> str:
    return str(n).translate(_SUBSCRIPTS)


# fixed-points

@cli.command("fixed-points")
@click.option("--max-n", "max_n", type=int, default=None, help="Largest n to check")
@click.pass_context
def fixed_points(ctx, max_n):
    """Check the golden-ratio fixed points of Z_n."""
    config = _run_config(ctx, "fixed-points", max_n=max_n)
    report = golden_fixed_points(config.max_n)

    table = Table(title=f"Fixed points for 1 <= n <= {config.max_n}")
    table.add_column("Statement", style="cyan")
    table.add_column("Residues", justify="center")
    table.add_column("Hits by residue class")
    for item in FIXED_POINT_ITEMS:
        hits = report.hits[item.label]
        residues = ",".join(str(r) for r in item.residues)
        table.add_row(item.label, f"{residues} mod {item.modulus}",
                      " ".join(f"{r}:{hits[r]}" for r in sorted(hits)))
    console.print(table)

    if not report.passed:
        for violation in report.violations[:20]:
            console.print(f"[red]✗ {violation}[/red]")
        sys.exit(EXIT_FAILURE)
    console.print("[green]✓ no violations[/green]")


# oeis

@cli.command()
@click.option("--id", "oeis_id", required=True, help="A-number, e.g. A000330")
@click.option("--terms", type=click.IntRange(min=1), default=10, help="Number of terms to compare")
@click.option("--offline/--online", default=None, help="Never use the network (default from config)")
@click.pass_context
def oeis(ctx, oeis_id, terms, offline):
    """Compare a generated sequence with its OEIS entry."""
    try:
        parse_oeis_id(oeis_id)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--id")
    config = _run_config(ctx, "oeis", offline=offline)
    settings: Settings = ctx.obj["settings"]
    client = OeisClient.from_settings(settings)

    try:
        fixture = client.fetch(oeis_id, offline=config.offline)
    except (NotAvailableOffline, NetworkError, ParseError) as e:
        console.print(f"[red]✗ {e}[/red]")
        sys.exit(EXIT_FAILURE)

    key = fixture.oeis_id
    if key not in GENERATORS:
        console.print(f"[yellow]{key}: no generator registered; showing terms only[/yellow]")
        click.echo(" ".join(str(t) for t in fixture.terms[:terms]))
        return

    try:
        report = crosscheck(fixture, GENERATORS[key], terms)
    except (Mismatch, ValueError) as e:
        console.print(f"[red]✗ {key}: {e}[/red]")
        sys.exit(EXIT_FAILURE)
    console.print(f"[green]✓ {key} matches[/green] {GENERATORS[key].description} "
                  f"({report.checked} terms, {fixture.source.value})")


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
