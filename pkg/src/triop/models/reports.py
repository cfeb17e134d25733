"""Run reports and their text and JSON renderings."""

from __future__ import annotations

import json
from collections.abc import Iterable
from io import StringIO
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console
from rich.table import Table

from triop.ooperator import natural_key

Status = Literal["pass", "fail", "finding"]
Format = Literal["text", "json"]

EXIT_CODES: dict[Status, int] = {"pass": 0, "fail": 1, "finding": 3}
USAGE_EXIT_CODE = 2

_RENDER_WIDTH = 120


class ReportItem(BaseModel):
    """Outcome for one checked object (a family, a table, a tensor, a document)."""

    model_config = ConfigDict(extra="ignore", populate_by_name=True)

    name: str
    status: Status
    residual_summary: str = Field(default="", alias="residualSummary")
    duration_millis: float | None = Field(default=None, alias="durationMillis")


class TableRow(BaseModel):
    """A key/value line of a printed table (products, brackets, assignments)."""

    model_config = ConfigDict(extra="ignore")

    key: str
    value: str


class Metadata(BaseModel):
    """Session settings a report was produced under."""

    model_config = ConfigDict(extra="ignore")

    d: int
    version: str
    seed: int


class RunReport(BaseModel):
    """Everything one CLI command produced."""

    model_config = ConfigDict(extra="ignore")

    command: str
    status: Status
    items: list[ReportItem] = []
    table: list[TableRow] = []
    metadata: Metadata

    @property
    def findings(self) -> list[ReportItem]:
        return [item for item in self.items if item.status == "finding"]


def item_status(passed: bool, expected_finding: bool = False) -> Status:
    """Failures matching a curated erratum are findings; anything else failing is a failure."""
    if passed:
        return "pass"
    return "finding" if expected_finding else "fail"


def overall_status(items: Iterable[ReportItem]) -> Status:
    statuses = {item.status for item in items}
    if "fail" in statuses:
        return "fail"
    if "finding" in statuses:
        return "finding"
    return "pass"


def build_report(
    command: str,
    items: Iterable[ReportItem],
    metadata: Metadata,
    table: Iterable[TableRow] = (),
) -> RunReport:
    ordered = sorted(items, key=lambda item: natural_key(item.name))
    return RunReport(
        command=command,
        status=overall_status(ordered),
        items=ordered,
        table=list(table),
        metadata=metadata,
    )


def exit_code(status: Status) -> int:
    return EXIT_CODES[status]


def _render_text(report: RunReport) -> str:
    buffer = StringIO()
    console = Console(
        file=buffer,
        width=_RENDER_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        markup=False,
    )
    if report.items:
        timed = any(item.duration_millis is not None for item in report.items)
        items = Table(title=report.command)
        items.add_column("Name", style="cyan")
        items.add_column("Status")
        items.add_column("Residual", overflow="fold")
        if timed:
            items.add_column("ms", justify="right")
        for item in report.items:
            row = [item.name, item.status, item.residual_summary]
            if timed:
                row.append("" if item.duration_millis is None else f"{item.duration_millis:.1f}")
            items.add_row(*row)
        console.print(items)
    if report.table:
        rows = Table(show_header=False)
        rows.add_column("Key", style="cyan")
        rows.add_column("Value", overflow="fold")
        for entry in report.table:
            rows.add_row(entry.key, entry.value)
        console.print(rows)
    if report.findings:
        console.print("Findings:")
        for item in report.findings:
            console.print(f"  {item.name}: {item.residual_summary}", soft_wrap=True)
    console.print(f"{len(report.items)} items, {report.status}")
    return buffer.getvalue()


def render_report(report: RunReport, fmt: Format = "text") -> str:
    """Render deterministically; the same report always yields the same bytes."""
    if fmt == "json":
        payload = report.model_dump(mode="json", by_alias=True, exclude_none=True)
        return json.dumps(payload, indent=2) + "\n"
    return _render_text(report)
