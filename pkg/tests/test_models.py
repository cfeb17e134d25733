"""Tests for the input documents and run reports."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from triop.exceptions import InputError, PreconditionError
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
from triop.prelie import PreLieAlgebra
from triop.scalar import LaurentPoly, Scalar, quadratic_field
from triop.trisys import TriAlgebra

A3_JSON = {"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "coeffs": [1, 0, 0]}]}


def _write(tmp_path: Path, payload: object, name: str = "doc.json") -> Path:
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def _metadata() -> Metadata:
    return Metadata(d=3, version="0.1.0", seed=20240101)


class TestAlgebraDocument:
    """Tests for AlgebraDocument."""

    def test_a3(self) -> None:
        """Test the one-bracket document is A3."""
        assert AlgebraDocument.model_validate(A3_JSON).to_algebra() == TriAlgebra.a3()

    def test_from_algebra(self) -> None:
        """Test an algebra is written with 1-based keys and rendered coefficients."""
        document = AlgebraDocument.from_algebra(TriAlgebra.a3())
        assert document.d == 3
        (entry,) = document.brackets
        assert (entry.key, entry.coeffs) == ("(1,2,3)", ["1", "0", "0"])

    @pytest.mark.parametrize(
        "bracket",
        [
            {"i": 2, "j": 1, "k": 3, "coeffs": [1, 0, 0]},
            {"i": 1, "j": 2, "k": 4, "coeffs": [1, 0, 0]},
            {"i": 1, "j": 2, "k": 3, "coeffs": [1, 0]},
        ],
    )
    def test_rejects_bad_bracket(self, bracket: dict[str, object]) -> None:
        """Test unordered keys, out-of-range indices and short coefficient lists."""
        document = AlgebraDocument.model_validate({"dim": 3, "brackets": [bracket]})
        with pytest.raises(InputError):
            document.to_algebra()

    def test_rejects_other_field(self) -> None:
        """Test a document over another field is refused."""
        document = AlgebraDocument.model_validate({**A3_JSON, "d": 5})
        with pytest.raises(InputError, match="sqrt 5"):
            document.to_algebra()
        with quadratic_field(5):
            assert document.to_algebra() == TriAlgebra.a3()

    def test_basis_names(self) -> None:
        """Test custom basis names and their count."""
        algebra = AlgebraDocument.model_validate({**A3_JSON, "basis": ["x", "y", "z"]}).to_algebra()
        assert algebra.basis_names == ("x", "y", "z")
        with pytest.raises(InputError):
            AlgebraDocument.model_validate({**A3_JSON, "basis": ["x"]}).to_algebra()


class TestOperatorDocument:
    """Tests for OperatorDocument."""

    def test_side_conditions_alias(self) -> None:
        """Test sideConditions feeds the operator's nonzero assertions."""
        document = OperatorDocument.model_validate(
            {
                "dim": 2,
                "name": "T",
                "entries": [["1/a", 0], [0, "s"]],
                "sideConditions": ["a"],
            }
        )
        operator = document.to_operator()
        assert operator.name == "T"
        assert operator.side_conditions == (LaurentPoly.variable("a"),)
        assert operator.entries[1][1] == LaurentPoly.constant(Scalar.sqrt_d())

    def test_missing_side_condition(self) -> None:
        """Test a denominator without its side condition is a precondition error."""
        document = OperatorDocument.model_validate({"dim": 1, "entries": [["1/a"]]})
        with pytest.raises(PreconditionError):
            document.to_operator()

    def test_rejects_shape(self) -> None:
        """Test entries must be dim x dim."""
        document = OperatorDocument.model_validate({"dim": 2, "entries": [[1, 0]]})
        with pytest.raises(InputError, match="2x2"):
            document.to_operator()


class TestOtherDocuments:
    """Tests for the 3-Pre-Lie, tensor and matrix documents."""

    def test_pre_lie(self) -> None:
        """Test products keep their free third index."""
        document = PreLieDocument.model_validate(
            {"dim": 2, "products": [{"i": 1, "j": 2, "k": 2, "coeffs": [0, 1]}]}
        )
        assert document.to_pre_lie() == PreLieAlgebra(2, {(0, 1, 1): (0, 1)})
        assert PreLieDocument.from_pre_lie(document.to_pre_lie()).products[0].key == "(1,2,2)"

    def test_pre_lie_rejects_i_not_below_j(self) -> None:
        """Test products need i < j."""
        document = PreLieDocument.model_validate(
            {"dim": 2, "products": [{"i": 2, "j": 2, "k": 1, "coeffs": [1, 0]}]}
        )
        with pytest.raises(InputError, match=r"\(2,2,1\)"):
            document.to_pre_lie()

    def test_tensor(self) -> None:
        """Test a tensor document and its shape check."""
        tensor = TensorDocument.model_validate({"dim": 2, "coeffs": [[0, 1], [-1, 0]]}).to_tensor()
        assert tensor.is_skew_symmetric
        with pytest.raises(InputError):
            TensorDocument.model_validate({"dim": 2, "coeffs": [[0, 1]]}).to_tensor()

    def test_matrix(self) -> None:
        """Test matrix entries become scalars and parameters are refused."""
        rows = MatrixDocument.model_validate({"matrix": [["s", "1/2"], [0, 1]]}).to_matrix()
        assert rows[0][0] == Scalar.sqrt_d()
        assert isinstance(rows[1][0], Scalar)
        with pytest.raises(InputError, match="not a constant"):
            MatrixDocument.model_validate({"matrix": [["a"]]}).to_matrix()


class TestLoadDocument:
    """Tests for load_document."""

    def test_reads_file(self, tmp_path: Path) -> None:
        """Test a valid file is parsed into the model."""
        document = load_document(_write(tmp_path, A3_JSON), AlgebraDocument)
        assert document.dim == 3

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test an unreadable path carries the source in the message."""
        path = tmp_path / "absent.json"
        with pytest.raises(InputError) as exc_info:
            load_document(path, AlgebraDocument)
        assert exc_info.value.source == str(path)
        assert str(exc_info.value).startswith(str(path))

    def test_schema_error(self, tmp_path: Path) -> None:
        """Test schema violations name the model and the field."""
        path = _write(tmp_path, {"dim": 0})
        with pytest.raises(InputError, match="invalid AlgebraDocument: dim"):
            load_document(path, AlgebraDocument)

    def test_malformed_json(self, tmp_path: Path) -> None:
        """Test text that is not JSON is an input error."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputError):
            load_document(path, AlgebraDocument)


class TestReports:
    """Tests for report status and rendering."""

    def test_item_status(self) -> None:
        """Test pass, fail and expected findings."""
        assert item_status(passed=True) == "pass"
        assert item_status(passed=True, expected_finding=True) == "pass"
        assert item_status(passed=False) == "fail"
        assert item_status(passed=False, expected_finding=True) == "finding"

    def test_overall_status_and_exit_codes(self) -> None:
        """Test a failure outranks a finding, which outranks a pass."""
        items = [
            ReportItem(name="O2", status="pass"),
            ReportItem(name="O19", status="finding"),
        ]
        report = build_report("catalog verify", items, _metadata())
        assert report.status == "finding"
        assert exit_code(report.status) == 3
        failing = build_report("x", [*items, ReportItem(name="O3", status="fail")], _metadata())
        assert exit_code(failing.status) == 1
        assert exit_code(build_report("x", [], _metadata()).status) == 0

    def test_natural_order(self) -> None:
        """Test items are sorted by their numeric suffix."""
        items = [ReportItem(name=name, status="pass") for name in ("O10", "O2", "O1")]
        report = build_report("x", items, _metadata())
        assert [item.name for item in report.items] == ["O1", "O2", "O10"]

    def test_json(self) -> None:
        """Test aliases are used and empty durations left out."""
        item = ReportItem(name="O19", status="finding", residual_summary="(1,2,3): e2: -2*a21")
        timed = ReportItem(name="O2", status="pass", duration_millis=1.5)
        report = build_report("catalog verify", [item, timed], _metadata())
        payload = json.loads(render_report(report, "json"))
        assert payload["status"] == "finding"
        assert payload["items"][1] == {
            "name": "O19",
            "status": "finding",
            "residualSummary": "(1,2,3): e2: -2*a21",
        }
        assert payload["items"][0]["durationMillis"] == 1.5
        assert payload["metadata"] == {"d": 3, "version": "0.1.0", "seed": 20240101}

    def test_text(self) -> None:
        """Test the text rendering keeps bracketed residuals and ends with a tally."""
        item = ReportItem(name="O30", status="finding", residual_summary="{e2,e3,e1}[e1]: 2")
        rows = [TableRow(key="{e2,e3,e1}", value="2*e1")]
        report = build_report("prelie diff", [item], _metadata(), rows)
        text = render_report(report)
        assert "Findings:\n  O30: {e2,e3,e1}[e1]: 2\n" in text
        assert "2*e1" in text
        assert text.endswith("1 items, finding\n")
        assert render_report(report) == text
