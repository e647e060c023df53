# app/cli/api/route.py
import csv
import io
import sys
from typing import Annotated, List, Optional, Sequence

import click
import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from app.cli.api.dto import Command, OutputFormat
from app.cli.api.handler import (
    handle_classes,
    handle_rack_decompose,
    handle_reality,
    handle_scan_an,
    handle_screen,
    handle_table_dn,
)
from app.core.config import settings
from app.core.errors import NicholsError, SpecError
from app.core.logger import get_logger, set_log_level
from app.screener.entity.verdict import VerdictRecord
from app.screener.service.table_service import summarize_table

cli = typer.Typer(
    name=settings.APP_NAME,
    help="Screen Nichols algebras of Yetter-Drinfeld modules over finite groups.",
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)
logger = get_logger("CliRouter")

GroupOption = Annotated[str, typer.Option("--group", help="An:<n>, Sn:<n>, Dn:<n>, Zn:<n> or (G1)x(G2)")]
ClassOption = Annotated[str, typer.Option("--class", help='Class representative, e.g. "(1 2)(3 4)" or "x*y^2"')]
FormatOption = Annotated[OutputFormat, typer.Option("--format", help="text, json or csv")]
NOption = Annotated[str, typer.Option("--n", help="One value or a comma-separated list")]
MaxDegreeOption = Annotated[int, typer.Option("--max-degree", help="Hilbert-prefix degree cap")]
BudgetOption = Annotated[int, typer.Option("--budget", help="Symmetrizer word budget")]

VERDICT_COLUMNS = ["class_rep", "class_size", "centralizer", "rep", "q_ss", "verdict", "dimension", "negative_braiding", "reasons"]


@cli.callback()
def main_options(
    log_level: Annotated[str, typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")] = settings.LOG_LEVEL,
):
    try:
        set_log_level(log_level)
    except ValueError as e:
        raise SpecError(str(e)) from None


def _command(**fields) -> Command:
    try:
        return Command(**fields)
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise SpecError(f"invalid arguments: {problems}") from None


def _parse_ns(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise SpecError(f"--n expects integers, got {text!r}") from None


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "; ".join(str(v) for v in value)
    return str(value)


def _emit_json(rows: Sequence[BaseModel]) -> None:
    for row in rows:
        typer.echo(row.model_dump_json(exclude_none=True))


def _emit_csv(rows: Sequence[BaseModel]) -> None:
    if not rows:
        return
    fields = list(type(rows[0]).model_fields)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_cell(getattr(row, f)) for f in fields])
    typer.echo(buffer.getvalue(), nl=False)


def _emit_table(rows: Sequence[BaseModel], title: str, columns: Optional[List[str]] = None) -> None:
    console = Console()
    if not rows:
        console.print(f"{title}: no rows")
        return
    names = columns or list(type(rows[0]).model_fields)
    table = Table(title=title)
    for name in names:
        table.add_column(name)
    for row in rows:
        table.add_row(*(_cell(getattr(row, name)).replace("; ", "\n") for name in names))
    console.print(table)


def _emit(rows: Sequence[BaseModel], fmt: OutputFormat, title: str, columns: Optional[List[str]] = None) -> None:
    if fmt == OutputFormat.json:
        _emit_json(rows)
    elif fmt == OutputFormat.csv:
        _emit_csv(rows)
    else:
        _emit_table(rows, title, columns)


@cli.command("classes")
def classes_command(group: GroupOption, fmt: FormatOption = OutputFormat.text):
    """List the conjugacy classes of a group with their centralizers."""
    cmd = _command(verb="classes", group=group, format=fmt)
    _emit(handle_classes(cmd), cmd.format, f"Conjugacy classes of {group}")


@cli.command("screen")
def screen_command(
    group: GroupOption,
    class_rep: ClassOption,
    rep: Annotated[str, typer.Option("--rep", help="Irrep label of the centralizer, e.g. chi:2, sgn⊗eps, rho:5")],
    fmt: FormatOption = OutputFormat.text,
    max_degree: MaxDegreeOption = settings.MAX_DEGREE,
    budget: BudgetOption = settings.BUDGET,
    verify: Annotated[bool, typer.Option("--verify", help="Check the braid equation before screening")] = False,
):
    """Screen one pair (class, irrep of the centralizer)."""
    cmd = _command(
        verb="screen", group=group, class_rep=class_rep, rep=rep, format=fmt,
        max_degree=max_degree, budget=budget, verify=verify,
    )
    record = handle_screen(cmd)
    if cmd.format == OutputFormat.text:
        console = Console()
        table = Table(title=f"{record.group}: {record.class_rep}, {record.rep}", show_header=False)
        table.add_column("field")
        table.add_column("value")
        for name in VerdictRecord.model_fields:
            value = getattr(record, name)
            if value is not None:
                table.add_row(name, _cell(value).replace("; ", "\n"))
        console.print(table)
    else:
        _emit([record], cmd.format, "")


@cli.command("table-dn")
def table_dn_command(
    n: NOption,
    fmt: FormatOption = OutputFormat.text,
    max_degree: MaxDegreeOption = settings.MAX_DEGREE,
    budget: BudgetOption = settings.BUDGET,
):
    """Verdicts for every class and centralizer irrep of the dihedral groups D_n."""
    cmd = _command(verb="table-dn", n=_parse_ns(n), format=fmt, max_degree=max_degree, budget=budget)
    tables = handle_table_dn(cmd)
    if cmd.format != OutputFormat.text:
        _emit([row for rows in tables.values() for row in rows], cmd.format, "")
        return
    console = Console()
    for size, rows in tables.items():
        table = Table(title=f"D_{size}")
        for column in ("Orbit", "Centralizer", "Reps", "dim B(V)", "count"):
            table.add_column(column)
        for line in summarize_table(size, rows):
            table.add_row(line.orbit, line.centralizer, ", ".join(line.reps), line.dimension_text, str(line.count))
        console.print(table)


@cli.command("scan-an")
def scan_an_command(
    n: NOption,
    fmt: FormatOption = OutputFormat.text,
    jobs: Annotated[int, typer.Option("--jobs", help="Worker processes")] = settings.JOBS,
    max_degree: MaxDegreeOption = settings.MAX_DEGREE,
    budget: BudgetOption = settings.BUDGET,
):
    """Screen every class of the alternating groups A_n, 4 <= n <= 8."""
    cmd = _command(verb="scan-an", n=_parse_ns(n), format=fmt, jobs=jobs, max_degree=max_degree, budget=budget)
    rows = handle_scan_an(cmd)
    _emit(rows, cmd.format, f"A_{n}", VERDICT_COLUMNS)


@cli.command("rack-decompose")
def rack_decompose_command(
    n: NOption,
    d: Annotated[int, typer.Option("--d", help="Divisor of n")],
    fmt: FormatOption = OutputFormat.text,
):
    """Split the reflections of D_n into copies of the reflections of D_d."""
    cmd = _command(verb="rack-decompose", n=_parse_ns(n), d=d, format=fmt)
    _emit(handle_rack_decompose(cmd), cmd.format, f"Reflections of D_{n} over D_{d}")


@cli.command("reality")
def reality_command(group: GroupOption, class_rep: ClassOption, fmt: FormatOption = OutputFormat.text):
    """Reality, absolute reality and power witnesses of a class."""
    cmd = _command(verb="reality", group=group, class_rep=class_rep, format=fmt)
    _emit([handle_reality(cmd)], cmd.format, f"{group}: {class_rep}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one command line; returns the process exit code."""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        cli(args=args, prog_name=settings.APP_NAME, standalone_mode=False)
    except NicholsError as e:
        logger.debug(f"{type(e).__name__}: {e.detail}")
        typer.echo(f"error: {e.detail}", err=True)
        return e.exit_code
    except click.UsageError as e:
        e.show()
        return 2
    except click.Abort:
        typer.echo("aborted", err=True)
        return 1
    return 0
