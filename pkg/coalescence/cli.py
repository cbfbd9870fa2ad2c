# coalescence/cli.py

"""
Command-line entry point.

Exit codes: 0 success, 1 verification failure or route disagreement,
2 usage error. Results go to stdout; logs go to stderr.
"""

import csv
import io
import logging
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Iterator, Optional

import orjson
import typer
from pydantic import BaseModel

from .core.verifier import run_verification
from .errors import BijectionError, ParameterError
from .schemas import MonteCarloResult, TableResult, VerificationReport
from .services import queries
from .utils import format_rational, setup_logging

logger = logging.getLogger("cycle_coalescence.cli")

app = typer.Typer(
    name="coalescence",
    help="Exact coalescence probabilities for products of two random n-cycles.",
    no_args_is_help=True,
    add_completion=False,
)

EXIT_FAILURE = 1
EXIT_USAGE = 2


class Method(str, Enum):
    closed = "closed"
    sum = "sum"
    bona_pittel = "bona-pittel"
    brute = "brute"
    mc = "mc"


class DistMethod(str, Enum):
    formula = "formula"
    brute = "brute"


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class TableFormat(str, Enum):
    csv = "csv"
    json = "json"
    markdown = "markdown"


class Suite(str, Enum):
    identities = "identities"
    bijections = "bijections"
    oracle = "oracle"
    all = "all"


@contextmanager
def usage_errors() -> Iterator[None]:
    """Turns precondition failures into a usage message and exit code 2."""
    try:
        yield
    except (ParameterError, BijectionError) as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=EXIT_USAGE)


def dump_json(data: Any) -> str:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode()


def emit(text: str, output: Optional[Path] = None) -> None:
    if output is None:
        typer.echo(text)
        return
    output.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info(f"Wrote {output}")


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING or ERROR. Defaults to COALESCENCE_LOG_LEVEL or INFO."
    ),
):
    setup_logging(log_level)


# --- prob ---


@app.command()
def prob(
    n: int = typer.Option(..., "--n", help="Size of the two n-cycles."),
    k: int = typer.Option(..., "--k", help="Elements 1..k must share a cycle."),
    method: Method = typer.Option(Method.closed, "--method"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Monte-Carlo sample count (default 10^6)."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Monte-Carlo seed; required for --method mc."),
    check: bool = typer.Option(False, "--check", help="Cross-check every route; exit 1 if they disagree."),
    decimal: Optional[int] = typer.Option(None, "--decimal", help="Also print a decimal with this many significant digits."),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="text, or json for the full result document."),
):
    """Probability that 1..k lie in one cycle of the product of two uniform n-cycles."""
    with usage_errors():
        result = queries.probability_query(
            n, k, method=method.value, samples=samples, seed=seed, check=check, precision=decimal
        )

    if fmt is OutputFormat.json:
        typer.echo(dump_json(result))
    elif isinstance(result, MonteCarloResult):
        typer.echo(f"{result.estimate} +/- {result.stderr}")
        if result.reference is not None:
            typer.echo(f"closed: {format_rational(result.reference)}")
    else:
        typer.echo(format_rational(result.probability))
        if result.decimal is not None:
            typer.echo(result.decimal)
        for route, value in (result.routes or {}).items():
            typer.echo(f"{route}: {format_rational(value)}")

    if isinstance(result, MonteCarloResult):
        failed = result.within_five_stderr is False
    else:
        failed = result.agree is False
    if failed:
        typer.echo("Routes disagree.", err=True)
        raise typer.Exit(code=EXIT_FAILURE)


# --- table ---


def table_markdown(table: TableResult) -> str:
    lines = ["| k | n even | n odd |", "|---|---|---|"]
    rows = table.rows
    for even, odd in zip(rows[::2], rows[1::2]):
        lines.append(f"| {even.k} | {even.expression} | {odd.expression} |")
    return "\n".join(lines)


def table_csv(table: TableResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "parity", "constant", "poles", "coefficients", "expression"])
    for row in table.rows:
        writer.writerow([
            row.k,
            row.parity,
            format_rational(row.constant),
            " ".join(str(term.pole) for term in row.terms),
            " ".join(format_rational(term.coefficient) for term in row.terms),
            row.expression,
        ])
    return buffer.getvalue().rstrip("\n")


@app.command()
def table(
    k_max: int = typer.Option(5, "--k-max", help="Largest k to tabulate."),
    fmt: TableFormat = typer.Option(TableFormat.markdown, "--format"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to this file instead of stdout."),
):
    """Partial-fraction rows of the coalescence probability for k = 1..k-max, both parities of n."""
    with usage_errors():
        result = queries.table_query(k_max)
    if fmt is TableFormat.json:
        emit(dump_json(result), output)
    elif fmt is TableFormat.csv:
        emit(table_csv(result), output)
    else:
        emit(table_markdown(result), output)


# --- count ---


@app.command()
def count(
    n: int = typer.Option(..., "--n"),
    r: Optional[int] = typer.Option(None, "--r", help="Number of colors."),
    k: Optional[int] = typer.Option(None, "--k", help="Subset size (with --r and --t)."),
    t: Optional[int] = typer.Option(None, "--t", help="Colors met by the subset (with --r and --k)."),
    svector: Optional[str] = typer.Option(None, "--svector", help="Color multiplicities, e.g. 5,2,4,1,2,2."),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format"),
):
    """Number of colored cycles (by r or by s-vector) or of t-colored k-subsets of r-colored cycles."""
    with usage_errors():
        parsed = queries.parse_int_list(svector, "s-vector") if svector is not None else None
        result = queries.count_query(n, r=r, k=k, t=t, svector=parsed)
    typer.echo(dump_json(result) if fmt is OutputFormat.json else str(result.count))


# --- dist ---


@app.command()
def dist(
    n: int = typer.Option(..., "--n"),
    method: DistMethod = typer.Option(DistMethod.formula, "--method"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format"),
):
    """Distribution of the number of cycles of the product, one "nu,probability" row per cycle count."""
    with usage_errors():
        result = queries.distribution_query(n, method.value)
    if fmt is OutputFormat.json:
        typer.echo(dump_json(result))
        return
    typer.echo("nu,probability")
    for entry in result.distribution:
        typer.echo(f"{entry.nu},{format_rational(entry.probability)}")


# --- verify ---


def verification_lines(report: VerificationReport) -> Iterator[str]:
    for check in report.reports:
        status = "PASS" if check.passed else "FAIL"
        yield f"{status} {check.suite}/{check.name}: {check.points} points over {check.grid}"
        if check.counterexample is not None:
            example = check.counterexample
            yield f"     first counterexample at {example.parameters}: expected {example.expected}, got {example.actual}"
    summary = report.summary
    yield f"{summary.passed_checks}/{summary.total_checks} checks passed, {summary.total_points} points"


@app.command()
def verify(
    suite: Suite = typer.Option(Suite.all, "--suite"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Cap on the n-indexed grids."),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="text, or json for the VerificationReport document."),
):
    """Run a verification suite; exit 0 iff every check passes."""
    with usage_errors():
        report = run_verification(suite.value, n_max)
    if fmt is OutputFormat.json:
        typer.echo(dump_json(report))
    else:
        for line in verification_lines(report):
            typer.echo(line)
    if not report.passed:
        raise typer.Exit(code=EXIT_FAILURE)


# --- trace ---


@app.command()
def trace(
    sigma: str = typer.Option(..., "--sigma", help='The n-cycle, e.g. "(1 2 3)".'),
    colors: str = typer.Option(..., "--colors", help="Color of each element 1..n, e.g. 1,2,3."),
):
    """Print every intermediate structure of the bijection chain for one colored cycle as JSON."""
    with usage_errors():
        document = queries.trace_query(sigma, colors)
    typer.echo(dump_json(document))


# --- serve ---


@app.command()
def serve(
    host: str = typer.Option("127.0.0.1", "--host"),
    port: int = typer.Option(8000, "--port"),
    reload: bool = typer.Option(False, "--reload"),
):
    """Run the HTTP API with uvicorn."""
    import uvicorn

    uvicorn.run("coalescence.main:app", host=host, port=port, reload=reload)


if __name__ == "__main__":
    app()
