"""Command-line interface for triop."""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Callable, Sequence
from typing import Any, NoReturn, TypeVar

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from triop import __version__
from triop.catalogue import (
    CYBE_ERRATA,
    CYBE_NONZERO,
    INDUCED_ERRATA,
    INDUCED_TABLES,
    OPERATOR_ERRATA,
    load_catalogue,
    transcribed_table,
)
from triop.cybe import verify_cybe_catalogue, witness
from triop.exceptions import FieldConfigurationError, InputError, TriopError
from triop.expr import parse_assignments, render
from triop.models import (
    AlgebraDocument,
    MatrixDocument,
    Metadata,
    OperatorDocument,
    PreLieDocument,
    ReportItem,
    TableRow,
    TensorDocument,
    build_report,
    exit_code,
    item_status,
    load_document,
    render_report,
)
from triop.models.reports import USAGE_EXIT_CODE
from triop.ooperator import (
    ParamOperator,
    check_o_operator_direct,
    check_o_operator_expanded,
    check_o_operator_relative,
    classify_matrix,
    grid_completeness_search,
    natural_key,
    verify_catalogue,
)
from triop.prelie import (
    check_pre_lie_axioms,
    check_pre_lie_by_constants,
    dim2_experiment,
    induce_from_operator,
    table_diff,
)
from triop.scalar import DEFAULT_D, LaurentPoly, active_d, quadratic_field, validate_d
from triop.trisys import (
    TriAlgebra,
    adjoint_rep,
    check_fundamental_identity,
    coadjoint_rep,
    semidirect,
)

error_console = Console(stderr=True)

DEFAULT_SEED = 20240101

F = TypeVar("F", bound=Callable[..., Any])


def report_options(func: F) -> F:
    """Add the --format and --timings options shared by every command."""
    func = click.option(
        "--timings", is_flag=True, help="Include wall-clock durations in the report."
    )(func)
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
        help="Report format.",
    )(func)


def jobs_option(func: F) -> F:
    return click.option(
        "--jobs",
        "-j",
        type=click.IntRange(min=1),
        default=1,
        show_default=True,
        help="Worker processes.",
    )(func)


def fail_usage(e: TriopError) -> NoReturn:
    """Report an input or precondition error and exit with the usage code."""
    error_console.print(f"[red]Error:[/red] {escape(str(e))}", highlight=False)
    sys.exit(USAGE_EXIT_CODE)


def emit(
    ctx: click.Context,
    command: str,
    items: Sequence[ReportItem],
    fmt: str,
    table: Sequence[TableRow] = (),
) -> None:
    """Print the report on stdout and exit with the code its status maps to."""
    metadata = Metadata(d=active_d(), version=__version__, seed=ctx.obj["seed"])
    report = build_report(command, items, metadata, table)
    click.echo(render_report(report, "json" if fmt == "json" else "text"), nl=False)
    code = exit_code(report.status)
    if code:
        sys.exit(code)


class Stopwatch:
    """Per-item durations, reported only when --timings is given."""

    def __init__(self, enabled: bool) -> None:
        self.enabled = enabled
        self._start = time.perf_counter()

    def lap(self) -> float | None:
        now = time.perf_counter()
        elapsed = (now - self._start) * 1000
        self._start = now
        return round(elapsed, 1) if self.enabled else None


def vector_text(coords: Sequence[LaurentPoly], names: Sequence[str]) -> str:
    """Render a coordinate vector as a sum over basis names."""
    terms = []
    for c, name in zip(coords, names, strict=True):
        if c.is_zero:
            continue
        if c == LaurentPoly.one():
            terms.append(name)
        elif c == -LaurentPoly.one():
            terms.append(f"-{name}")
        elif c.is_term:
            terms.append(f"{render(c)}*{name}")
        else:
            terms.append(f"({render(c)})*{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def operator_text(T: ParamOperator) -> str:
    return "; ".join(", ".join(render(c) for c in row) for row in T.entries)


def _algebra_or_a3(path: str | None) -> TriAlgebra:
    if path is None:
        return TriAlgebra.a3()
    return load_document(path, AlgebraDocument).to_algebra()


@click.group()
@click.option(
    "--d",
    "d",
    type=int,
    default=DEFAULT_D,
    show_default=True,
    envvar="TRIOP_D",
    help="Square-free d of the coefficient field Q(sqrt d).",
)
@click.option(
    "--seed",
    type=int,
    default=DEFAULT_SEED,
    show_default=True,
    help="Seed for randomized audits.",
)
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr.")
@click.version_option(version=__version__, prog_name="triop")
@click.pass_context
def main(ctx: click.Context, d: int, seed: int, verbose: bool) -> None:
    """triop - exact checks of O-operators on 3-Lie algebras.

    Verifies the operator catalogue on the 3-dimensional 3-Lie algebra, the induced
    3-Pre-Lie tables and the Yang-Baxter solutions built from them.
    """
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(message)s",
            handlers=[RichHandler(console=error_console, show_path=False)],
        )
    try:
        validate_d(d)
    except FieldConfigurationError as e:
        fail_usage(e)
    ctx.ensure_object(dict)
    ctx.obj["seed"] = seed
    ctx.with_resource(quadratic_field(d))


@main.command("verify-algebra")
@click.option("--input", "input_path", required=True, help="Algebra JSON document.")
@click.option("--exhaustive", is_flag=True, help="Loop over every basis 5-tuple.")
@report_options
@click.pass_context
def verify_algebra(
    ctx: click.Context, input_path: str, exhaustive: bool, fmt: str, timings: bool
) -> None:
    """Check the fundamental identity of a 3-Lie algebra."""
    try:
        algebra = load_document(input_path, AlgebraDocument).to_algebra()
    except TriopError as e:
        fail_usage(e)
    watch = Stopwatch(timings)
    report = check_fundamental_identity(algebra, exhaustive=exhaustive)
    item = ReportItem(
        name="fundamental-identity",
        status=item_status(report.passed),
        residual_summary=report.summary(),
        duration_millis=watch.lap(),
    )
    emit(ctx, "verify-algebra", [item], fmt)


@main.command("verify-operator")
@click.option("--algebra", "algebra_path", required=True, help="Algebra JSON document.")
@click.option("--operator", "operator_path", required=True, help="Operator JSON document.")
@click.option(
    "--rep",
    type=click.Choice(["adjoint", "coadjoint"]),
    default="adjoint",
    show_default=True,
    help="Representation the operator is taken with respect to.",
)
@report_options
@click.pass_context
def verify_operator(
    ctx: click.Context,
    algebra_path: str,
    operator_path: str,
    rep: str,
    fmt: str,
    timings: bool,
) -> None:
    """Check the O-operator condition for an operator document."""
    watch = Stopwatch(timings)
    try:
        algebra = load_document(algebra_path, AlgebraDocument).to_algebra()
        operator = load_document(operator_path, OperatorDocument).to_operator()
        if rep == "adjoint":
            checks = [
                ("direct", check_o_operator_direct(algebra, operator)),
                ("expanded", check_o_operator_expanded(algebra, operator)),
            ]
        else:
            rho = coadjoint_rep(algebra)
            checks = [("coadjoint", check_o_operator_relative(algebra, rho, operator))]
    except TriopError as e:
        fail_usage(e)
    label = operator.name or "operator"
    items = [
        ReportItem(
            name=f"{label}:{kind}",
            status=item_status(report.passed),
            residual_summary=report.summary(),
            duration_millis=watch.lap(),
        )
        for kind, report in checks
    ]
    emit(ctx, "verify-operator", items, fmt)


@main.group("catalog")
def catalog() -> None:
    """The printed families of O-operators on A3."""


@catalog.command("list")
@click.option("--amended", is_flag=True, help="Include amended family forms.")
@report_options
@click.pass_context
def catalog_list(
    ctx: click.Context,
    amended: bool,
    fmt: str,
    timings: bool,  # noqa: ARG001
) -> None:
    """List the families with their rows and side conditions."""
    rows = []
    for family in load_catalogue(amended=amended):
        text = operator_text(family)
        if family.side_conditions:
            text += "  (" + ", ".join(f"{render(c)} != 0" for c in family.side_conditions) + ")"
        rows.append(TableRow(key=family.name, value=text))
    emit(ctx, "catalog list", [], fmt, rows)


@catalog.command("verify")
@click.option("--amended", is_flag=True, help="Also verify amended family forms.")
@report_options
@click.pass_context
def catalog_verify(ctx: click.Context, amended: bool, fmt: str, timings: bool) -> None:
    """Check every family symbolically against the O-operator condition on A3."""
    watch = Stopwatch(timings)
    results = verify_catalogue(TriAlgebra.a3(), load_catalogue(amended=amended))
    items = [
        ReportItem(
            name=name,
            status=item_status(report.passed, name in OPERATOR_ERRATA),
            residual_summary=report.summary(),
            duration_millis=watch.lap(),
        )
        for name, report in results.items()
    ]
    emit(ctx, "catalog verify", items, fmt)


@main.command("induce")
@click.option("--family", required=True, help="Family name, e.g. O7.")
@click.option("--params", default="", help="Parameter values, e.g. a21=1,a33=-2.")
@report_options
@click.pass_context
def induce(ctx: click.Context, family: str, params: str, fmt: str, timings: bool) -> None:
    """Print the 3-Pre-Lie table induced by a family on A3."""
    watch = Stopwatch(timings)
    a3 = TriAlgebra.a3()
    try:
        catalogue = load_catalogue(amended=True)
        if family not in catalogue:
            raise InputError(f"unknown family {family}")
        operator = catalogue.get(family)
        if params:
            operator = operator.specialize(parse_assignments(params))
        report = check_o_operator_direct(a3, operator)
        induced = induce_from_operator(a3, operator, check=family not in OPERATOR_ERRATA)
    except TriopError as e:
        fail_usage(e)
    names = induced.basis_names
    table = [
        TableRow(
            key="{" + ",".join(names[x] for x in key) + "}",
            value=vector_text(coeffs, names),
        )
        for key, coeffs in induced.nonzero_products()
    ]
    item = ReportItem(
        name=family,
        status=item_status(report.passed, family in OPERATOR_ERRATA),
        residual_summary=report.summary(),
        duration_millis=watch.lap(),
    )
    emit(ctx, "induce", [item], fmt, table)


@main.group("prelie")
def prelie() -> None:
    """3-Pre-Lie algebras and the induced tables."""


@prelie.command("verify")
@click.option("--input", "input_path", required=True, help="3-Pre-Lie JSON document.")
@click.option("--exhaustive", is_flag=True, help="Loop over every basis 5-tuple.")
@report_options
@click.pass_context
def prelie_verify(
    ctx: click.Context, input_path: str, exhaustive: bool, fmt: str, timings: bool
) -> None:
    """Check both 3-Pre-Lie identities, directly and through the structure constants."""
    try:
        algebra = load_document(input_path, PreLieDocument).to_pre_lie()
    except TriopError as e:
        fail_usage(e)
    watch = Stopwatch(timings)
    items = []
    for report in (
        check_pre_lie_axioms(algebra, exhaustive=exhaustive),
        check_pre_lie_by_constants(algebra),
    ):
        items.append(
            ReportItem(
                name=report.name,
                status=item_status(report.passed),
                residual_summary=report.summary(),
                duration_millis=watch.lap(),
            )
        )
    emit(ctx, "prelie verify", items, fmt)


@prelie.command("diff")
@click.option("--family", "families", multiple=True, help="Family name; repeat for several.")
@report_options
@click.pass_context
def prelie_diff(
    ctx: click.Context, families: tuple[str, ...], fmt: str, timings: bool
) -> None:
    """Compare induced tables against the printed ones (all families by default)."""
    selected = sorted(families or INDUCED_TABLES, key=natural_key)
    unknown = [name for name in selected if name not in INDUCED_TABLES]
    if unknown:
        fail_usage(InputError(f"no printed table for {', '.join(unknown)}"))
    a3 = TriAlgebra.a3()
    catalogue = load_catalogue()
    watch = Stopwatch(timings)
    items = []
    for name in selected:
        operator = catalogue.get(name)
        induced = induce_from_operator(a3, operator, check=False)
        axioms = check_pre_lie_axioms(induced)
        printed = transcribed_table(name)
        diff = table_diff(induced, printed.algebra)
        parts = [part for part in (diff.summary(), axioms.summary()) if part]
        if printed.duplicates:
            repeated = ", ".join(str(key) for key, _ in printed.duplicates)
            parts.append(f"printed key repeated: {repeated}")
        expected = diff.keys() == INDUCED_ERRATA.get(name, ()) and (
            axioms.passed or name in OPERATOR_ERRATA
        )
        items.append(
            ReportItem(
                name=name,
                status=item_status(axioms.passed and diff.is_empty, expected),
                residual_summary="; ".join(parts),
                duration_millis=watch.lap(),
            )
        )
    emit(ctx, "prelie diff", items, fmt)


@main.command("dim2-experiment")
@report_options
@click.pass_context
def dim2(ctx: click.Context, fmt: str, timings: bool) -> None:
    """Decide whether every 2-dimensional 3-Pre-Lie algebra has zero product."""
    watch = Stopwatch(timings)
    result = dim2_experiment()
    witness_text = ""
    table = [
        TableRow(key="parameters", value=", ".join(result.parameters)),
        TableRow(
            key="constraints",
            value="; ".join(render(c) for c in result.constraints) or "none",
        ),
    ]
    if result.witness is not None:
        witness_text = ", ".join(f"{k}={v}" for k, v in result.witness.items())
        table.append(TableRow(key="witness", value=witness_text))
    if result.is_trivial_only is None:
        summary = "inconclusive: no witness found on {-1, 0, 1}"
    elif result.is_trivial_only:
        summary = ""
    else:
        summary = f"nonzero products satisfy both identities, e.g. {witness_text}"
    item = ReportItem(
        name="dim2",
        status=item_status(result.agrees_with_triviality_claim, expected_finding=True),
        residual_summary=summary,
        duration_millis=watch.lap(),
    )
    emit(ctx, "dim2-experiment", [item], fmt, table)


@main.command("semidirect")
@click.option("--algebra", "algebra_path", help="Algebra JSON document (default A3).")
@click.option(
    "--rep",
    type=click.Choice(["coadjoint", "adjoint"]),
    default="coadjoint",
    show_default=True,
    help="Representation on the second summand.",
)
@report_options
@click.pass_context
def semidirect_product(
    ctx: click.Context, algebra_path: str | None, rep: str, fmt: str, timings: bool
) -> None:
    """Print the bracket table of A + V for the chosen representation."""
    watch = Stopwatch(timings)
    try:
        algebra = _algebra_or_a3(algebra_path)
        rho = coadjoint_rep(algebra) if rep == "coadjoint" else adjoint_rep(algebra)
        product = semidirect(algebra, rho)
    except TriopError as e:
        fail_usage(e)
    names = product.basis_names
    table = [
        TableRow(
            key="[" + ",".join(names[x] for x in key) + "]", value=vector_text(coeffs, names)
        )
        for key, coeffs in product.nonzero_products()
    ]
    report = check_fundamental_identity(product)
    item = ReportItem(
        name="fundamental-identity",
        status=item_status(report.passed),
        residual_summary=report.summary(),
        duration_millis=watch.lap(),
    )
    emit(ctx, "semidirect", [item], fmt, table)


@main.group("cybe")
def cybe() -> None:
    """The 3-Lie classical Yang-Baxter equation."""


@cybe.command("verify")
@click.option("--solution", "solutions", multiple=True, help="Solution name, e.g. r7.")
@jobs_option
@report_options
@click.pass_context
def cybe_verify(
    ctx: click.Context, solutions: tuple[str, ...], jobs: int, fmt: str, timings: bool
) -> None:
    """Rebuild the printed solutions from their families and check them (all by default)."""
    watch = Stopwatch(timings)
    try:
        outcomes = verify_cybe_catalogue(solutions or None, jobs=jobs)
    except KeyError as e:
        fail_usage(InputError(f"unknown solution {e.args[0]}"))
    # one wall-clock figure for the batch, shared out evenly
    elapsed = watch.lap()
    share = None if elapsed is None else round(elapsed / max(1, len(outcomes)), 1)
    items = []
    for outcome in outcomes:
        name = outcome.name
        expected = (
            outcome.skew
            and outcome.diff_images == CYBE_ERRATA.get(name, ())
            and (outcome.is_solution != (name in CYBE_NONZERO))
        )
        items.append(
            ReportItem(
                name=name,
                status=item_status(outcome.passed, expected),
                residual_summary=outcome.summary(),
                duration_millis=share,
            )
        )
    emit(ctx, "cybe verify", items, fmt)


@cybe.command("bracket")
@click.option("--algebra", "algebra_path", help="Algebra JSON document (default A3).")
@click.option("--tensor", "tensor_path", required=True, help="Tensor JSON document.")
@report_options
@click.pass_context
def cybe_bracket(
    ctx: click.Context, algebra_path: str | None, tensor_path: str, fmt: str, timings: bool
) -> None:
    """Compute [[r, r, r]] for a tensor and print its nonzero coefficients."""
    watch = Stopwatch(timings)
    try:
        algebra = _algebra_or_a3(algebra_path)
        r = load_document(tensor_path, TensorDocument).to_tensor()
        result = witness(algebra, r)
    except TriopError as e:
        fail_usage(e)
    names = algebra.basis_names
    entries = result.residual.nonzero()
    table = [
        TableRow(key=" (x) ".join(names[x] for x in index), value=render(value))
        for index, value in entries
    ]
    items = [
        ReportItem(
            name="skew-symmetry",
            status=item_status(r.is_skew_symmetric),
            residual_summary="" if r.is_skew_symmetric else "r differs from -switch(r)",
        ),
        ReportItem(
            name="yang-baxter",
            status=item_status(result.is_solution),
            residual_summary=f"{len(entries)} nonzero coefficients" if entries else "",
            duration_millis=watch.lap(),
        ),
    ]
    emit(ctx, "cybe bracket", items, fmt, table)


@main.command("classify")
@click.option("--matrix", "matrix_path", required=True, help="Matrix JSON document.")
@report_options
@click.pass_context
def classify(ctx: click.Context, matrix_path: str, fmt: str, timings: bool) -> None:
    """Find every family containing a constant O-operator on A3."""
    watch = Stopwatch(timings)
    try:
        matrix = load_document(matrix_path, MatrixDocument).to_matrix()
        matches = classify_matrix(matrix)
    except TriopError as e:
        fail_usage(e)
    table = [
        TableRow(key=name, value=", ".join(f"{k}={v}" for k, v in assignment.items()) or "-")
        for name, assignment in matches
    ]
    item = ReportItem(
        name="classification",
        status=item_status(bool(matches), expected_finding=True),
        residual_summary="" if matches else "no printed family contains this operator",
        duration_millis=watch.lap(),
    )
    emit(ctx, "classify", [item], fmt, table)


@main.command("search-grid")
@click.option(
    "--bound", "-b", type=click.IntRange(min=0), default=1, show_default=True, help="Entry bound."
)
@click.option(
    "--audit",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Matrices to re-check with the direct condition.",
)
@jobs_option
@report_options
@click.pass_context
def search_grid(
    ctx: click.Context, bound: int, audit: int, jobs: int, fmt: str, timings: bool
) -> None:
    """Enumerate integer 3x3 operators on A3 and classify every solution found."""
    watch = Stopwatch(timings)
    result = grid_completeness_search(bound, jobs=jobs, audit=audit, seed=ctx.obj["seed"])
    elapsed = watch.lap()
    table = [
        TableRow(key="examined", value=str(result.examined)),
        TableRow(key="solutions", value=str(result.solution_count)),
    ]
    table += [TableRow(key=name, value=str(n)) for name, n in result.family_counts.items()]
    unmatched = result.unmatched
    shown = "; ".join(str(m) for m in unmatched[:3])
    more = f" ... and {len(unmatched) - 3} more" if len(unmatched) > 3 else ""
    items = [
        ReportItem(
            name="unmatched",
            status=item_status(not unmatched, expected_finding=True),
            residual_summary=f"{len(unmatched)} solutions in no family: {shown}{more}"
            if unmatched
            else "",
            duration_millis=elapsed,
        )
    ]
    if audit:
        items.append(
            ReportItem(
                name="audit",
                status=item_status(not result.audit_disagreements),
                residual_summary="; ".join(str(m) for m in result.audit_disagreements),
            )
        )
    emit(ctx, "search-grid", items, fmt, table)


if __name__ == "__main__":
    main()
