"""Pydantic models for the JSON input documents.

All indices in documents are 1-based; the kernel is 0-based.
"""

from __future__ import annotations

from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from triop.exceptions import InputError
from triop.expr import parse_expr, render
from triop.ooperator import ParamOperator
from triop.prelie import PreLieAlgebra
from triop.scalar import LaurentPoly, Scalar, active_d
from triop.trisys import TriAlgebra, TwoTensor

Expr = str | int

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def _poly(value: Expr) -> LaurentPoly:
    return parse_expr(str(value))


def _check_field(d: int | None) -> None:
    if d is not None and d != active_d():
        raise InputError(f"document is over Q(sqrt {d}) but the session uses d={active_d()}")


class BracketEntry(BaseModel):
    """One basis product with 1-based indices."""

    model_config = ConfigDict(extra="ignore")

    i: int
    j: int
    k: int
    coeffs: list[Expr]

    @property
    def key(self) -> str:
        return f"({self.i},{self.j},{self.k})"


class ProductEntry(BracketEntry):
    """One product {e_i, e_j, e_k} with i < j and k free."""


class AlgebraDocument(BaseModel):
    """A 3-Lie algebra by its nonzero brackets on increasing triples."""

    model_config = ConfigDict(extra="ignore")

    dim: int = Field(ge=1)
    basis: list[str] | None = None
    d: int | None = None
    brackets: list[BracketEntry] = []

    def to_algebra(self) -> TriAlgebra:
        _check_field(self.d)
        constants: dict[tuple[int, int, int], list[LaurentPoly]] = {}
        for entry in self.brackets:
            if not 1 <= entry.i < entry.j < entry.k <= self.dim:
                raise InputError(f"bracket {entry.key} needs 1 <= i < j < k <= dim")
            if len(entry.coeffs) != self.dim:
                raise InputError(f"bracket {entry.key} needs {self.dim} coeffs")
            constants[(entry.i - 1, entry.j - 1, entry.k - 1)] = [_poly(c) for c in entry.coeffs]
        if self.basis is not None and len(self.basis) != self.dim:
            raise InputError(f"{len(self.basis)} basis names for dimension {self.dim}")
        return TriAlgebra(self.dim, constants, self.basis)

    @classmethod
    def from_algebra(cls, A: TriAlgebra) -> AlgebraDocument:
        return cls(
            dim=A.dim,
            basis=list(A.basis_names),
            d=active_d(),
            brackets=[
                BracketEntry(i=i + 1, j=j + 1, k=k + 1, coeffs=[render(c) for c in coeffs])
                for (i, j, k), coeffs in A.nonzero_products()
            ],
        )


class OperatorDocument(BaseModel):
    """A linear map by its rows; row i holds the coordinates of T(e_i)."""

    model_config = ConfigDict(extra="ignore", populate_by_name=True)

    dim: int = Field(ge=1)
    entries: list[list[Expr]]
    side_conditions: list[Expr] = Field(default=[], alias="sideConditions")
    name: str = ""
    d: int | None = None

    def to_operator(self) -> ParamOperator:
        _check_field(self.d)
        if len(self.entries) != self.dim or any(len(row) != self.dim for row in self.entries):
            raise InputError(f"operator entries must form a {self.dim}x{self.dim} matrix")
        return ParamOperator(
            [[_poly(c) for c in row] for row in self.entries],
            [_poly(c) for c in self.side_conditions],
            self.name,
        )


class PreLieDocument(BaseModel):
    """A 3-Pre-Lie algebra by its nonzero products."""

    model_config = ConfigDict(extra="ignore")

    dim: int = Field(ge=1)
    basis: list[str] | None = None
    d: int | None = None
    products: list[ProductEntry] = []

    def to_pre_lie(self) -> PreLieAlgebra:
        _check_field(self.d)
        constants: dict[tuple[int, int, int], list[LaurentPoly]] = {}
        for entry in self.products:
            if not (1 <= entry.i < entry.j <= self.dim and 1 <= entry.k <= self.dim):
                raise InputError(f"product {entry.key} needs 1 <= i < j <= dim")
            if len(entry.coeffs) != self.dim:
                raise InputError(f"product {entry.key} needs {self.dim} coeffs")
            constants[(entry.i - 1, entry.j - 1, entry.k - 1)] = [_poly(c) for c in entry.coeffs]
        if self.basis is not None and len(self.basis) != self.dim:
            raise InputError(f"{len(self.basis)} basis names for dimension {self.dim}")
        return PreLieAlgebra(self.dim, constants, self.basis)

    @classmethod
    def from_pre_lie(cls, P: PreLieAlgebra) -> PreLieDocument:
        return cls(
            dim=P.dim,
            basis=list(P.basis_names),
            d=active_d(),
            products=[
                ProductEntry(i=i + 1, j=j + 1, k=k + 1, coeffs=[render(c) for c in coeffs])
                for (i, j, k), coeffs in P.nonzero_products()
            ],
        )


class TensorDocument(BaseModel):
    """An element of A (x) A by its coefficient matrix."""

    model_config = ConfigDict(extra="ignore")

    dim: int = Field(ge=1)
    coeffs: list[list[Expr]]
    d: int | None = None

    def to_tensor(self) -> TwoTensor:
        _check_field(self.d)
        if len(self.coeffs) != self.dim or any(len(row) != self.dim for row in self.coeffs):
            raise InputError(f"tensor coeffs must form a {self.dim}x{self.dim} matrix")
        return TwoTensor([[_poly(c) for c in row] for row in self.coeffs])


class MatrixDocument(BaseModel):
    """A constant 3x3 matrix, row i holding T(e_i)."""

    model_config = ConfigDict(extra="ignore")

    matrix: list[list[Expr]]
    d: int | None = None

    def to_matrix(self) -> list[list[Scalar]]:
        _check_field(self.d)
        rows = []
        for row in self.matrix:
            values = []
            for entry in row:
                poly = _poly(entry)
                if not poly.is_constant:
                    raise InputError(f"matrix entry {entry!r} is not a constant")
                values.append(poly.constant_value())
            rows.append(values)
        return rows


def load_document(path: str | Path, model: type[DocumentT]) -> DocumentT:
    """Read and validate a JSON document, turning every failure into InputError."""
    source = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read document: {e.strerror or e}", source) from e
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise InputError(f"invalid {model.__name__}: {problems}", source) from e
