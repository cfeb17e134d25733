"""Pydantic models for input documents and run reports."""

from triop.models.documents import (
    AlgebraDocument,
    BracketEntry,
    MatrixDocument,
    OperatorDocument,
    PreLieDocument,
    ProductEntry,
    TensorDocument,
    load_document,
)
from triop.models.reports import (
    Metadata,
    ReportItem,
    RunReport,
    Status,
    TableRow,
    build_report,
    exit_code,
    item_status,
    render_report,
)

__all__ = [
    "AlgebraDocument",
    "BracketEntry",
    "MatrixDocument",
    "Metadata",
    "OperatorDocument",
    "PreLieDocument",
    "ProductEntry",
    "ReportItem",
    "RunReport",
    "Status",
    "TableRow",
    "TensorDocument",
    "build_report",
    "exit_code",
    "item_status",
    "load_document",
    "render_report",
]
