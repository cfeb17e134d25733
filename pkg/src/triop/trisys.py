"""3-Lie algebras given by structure constants, their representations and tensors.

Indices are 0-based throughout the Python API; documents and reports use 1-based
indices. A bracket is stored only on strictly increasing triples and recovered
elsewhere by the sign of the sorting permutation.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from triop.exceptions import DimensionMismatchError, NotARepresentationError
from triop.scalar import Coefficient, LaurentPoly

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[LaurentPoly, ...], ...]

_ZERO = LaurentPoly.zero()


def _poly(value: LaurentPoly | Coefficient) -> LaurentPoly:
    return LaurentPoly.coerce(value)


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting indices, 0 if any index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def default_basis(dim: int, prefix: str = "e") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(dim))


class Vector:
    """Coordinates of an element over a fixed basis."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[LaurentPoly | Coefficient]) -> None:
        self._coords: tuple[LaurentPoly, ...] = tuple(_poly(c) for c in coords)

    @classmethod
    def zero(cls, dim: int) -> Vector:
        return cls([_ZERO] * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> Vector:
        return cls(LaurentPoly.one() if i == index else _ZERO for i in range(dim))

    @property
    def dim(self) -> int:
        return len(self._coords)

    @property
    def coords(self) -> tuple[LaurentPoly, ...]:
        return self._coords

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coords)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self._coords) if not c.is_zero]

    def __len__(self) -> int:
        return len(self._coords)

    def __getitem__(self, index: int) -> LaurentPoly:
        return self._coords[index]

    def __iter__(self) -> Iterator[LaurentPoly]:
        return iter(self._coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def _check(self, other: Vector) -> None:
        if other.dim != self.dim:
            raise DimensionMismatchError(f"vectors of dimension {self.dim} and {other.dim}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a + b for a, b in zip(self._coords, other._coords, strict=True))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a - b for a, b in zip(self._coords, other._coords, strict=True))

    def __neg__(self) -> Vector:
        return Vector(-a for a in self._coords)

    def scale(self, factor: LaurentPoly | Coefficient) -> Vector:
        factor = _poly(factor)
        return Vector(factor * a for a in self._coords)

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> Vector:
        return Vector(c.specialize(assignment) for c in self._coords)

    def __repr__(self) -> str:
        return f"Vector([{', '.join(str(c) for c in self._coords)}])"


def pairing(alpha: Vector, v: Vector) -> LaurentPoly:
    """The dual pairing of a covector with a vector in dual bases."""
    alpha._check(v)
    total = LaurentPoly.zero()
    for a, b in zip(alpha, v, strict=True):
        if not a.is_zero and not b.is_zero:
            total = total + a * b
    return total


@dataclass(frozen=True, slots=True)
class Violation:
    """One basis tuple on which an identity fails, with its nonzero residual."""

    indices: tuple[int, ...]
    residual: tuple[LaurentPoly, ...]
    axiom: str = ""

    def nonzero(self) -> list[tuple[int, LaurentPoly]]:
        return [(i, c) for i, c in enumerate(self.residual) if not c.is_zero]

    def describe(self, labels: Sequence[str] = ()) -> str:
        """Render as ``(1,2,3): e1: 2`` with 1-based indices."""
        names = list(labels) or [f"#{i + 1}" for i in range(len(self.residual))]
        where = ",".join(str(i + 1) for i in self.indices)
        terms = "; ".join(f"{names[i]}: {c}" for i, c in self.nonzero())
        prefix = f"{self.axiom} " if self.axiom else ""
        return f"{prefix}({where}): {terms}"


@dataclass(frozen=True, slots=True)
class CheckReport:
    """Outcome of an identity check; empty violations means the identity holds."""

    name: str
    violations: tuple[Violation, ...] = ()
    labels: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self, limit: int = 3) -> str:
        if self.passed:
            return ""
        shown = [v.describe(self.labels) for v in self.violations[:limit]]
        more = len(self.violations) - limit
        if more > 0:
            shown.append(f"... and {more} more")
        return " | ".join(shown)


def make_report(
    name: str, violations: Iterable[Violation], labels: Sequence[str] = ()
) -> CheckReport:
    """Build a report with violations in deterministic order."""
    ordered = sorted(violations, key=lambda v: (v.axiom, v.indices))
    return CheckReport(name, tuple(ordered), tuple(labels))


class TriAlgebra:
    """A finite-dimensional space with a skew-symmetric ternary bracket.

    ``constants`` maps 0-based triples i<j<k to the coordinates of [e_i, e_j, e_k].
    """

    __slots__ = ("_basis_names", "_constants", "_dim")

    def __init__(
        self,
        dim: int,
        constants: Mapping[tuple[int, int, int], Sequence[LaurentPoly | Coefficient]] | None = None,
        basis_names: Sequence[str] | None = None,
    ) -> None:
        if dim < 1:
            raise DimensionMismatchError(f"dimension must be positive, got {dim}")
        names = tuple(basis_names) if basis_names is not None else default_basis(dim)
        if len(names) != dim:
            raise DimensionMismatchError(f"{len(names)} basis names for dimension {dim}")
        stored: dict[tuple[int, int, int], tuple[LaurentPoly, ...]] = {}
        for key, coeffs in (constants or {}).items():
            i, j, k = key
            if not (0 <= i < j < k < dim):
                raise DimensionMismatchError(f"bracket key {key} is not an increasing triple")
            if len(coeffs) != dim:
                raise DimensionMismatchError(f"bracket {key} has {len(coeffs)} coordinates")
            vector = tuple(_poly(c) for c in coeffs)
            if any(not c.is_zero for c in vector):
                stored[key] = vector
        self._dim = dim
        self._basis_names = names
        self._constants = stored

    @classmethod
    def zero(cls, dim: int) -> TriAlgebra:
        return cls(dim)

    @classmethod
    def a3(cls) -> TriAlgebra:
        """The 3-dimensional algebra with [e1, e2, e3] = e1."""
        return cls(3, {(0, 1, 2): (1, 0, 0)})

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self._basis_names

    @property
    def constants(self) -> dict[tuple[int, int, int], tuple[LaurentPoly, ...]]:
        return dict(sorted(self._constants.items()))

    def nonzero_products(self) -> list[tuple[tuple[int, int, int], tuple[LaurentPoly, ...]]]:
        return sorted(self._constants.items())

    def parameters(self) -> frozenset[str]:
        names: set[str] = set()
        for coeffs in self._constants.values():
            for c in coeffs:
                names.update(c.parameters())
        return frozenset(names)

    def structure(self, i: int, j: int, k: int) -> tuple[LaurentPoly, ...]:
        """Coordinates of [e_i, e_j, e_k] for any index order."""
        sign = permutation_sign((i, j, k))
        if sign == 0:
            return (_ZERO,) * self._dim
        a, b, c = sorted((i, j, k))
        coeffs = self._constants.get((a, b, c))
        if coeffs is None:
            return (_ZERO,) * self._dim
        return coeffs if sign > 0 else tuple(-c for c in coeffs)

    def coefficient(self, i: int, j: int, k: int, t: int) -> LaurentPoly:
        return self.structure(i, j, k)[t]

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> TriAlgebra:
        return TriAlgebra(
            self._dim,
            {key: [c.specialize(assignment) for c in v] for key, v in self._constants.items()},
            self._basis_names,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriAlgebra):
            return NotImplemented
        return self._dim == other._dim and self._constants == other._constants

    def __hash__(self) -> int:
        return hash((self._dim, frozenset(self._constants.items())))

    def __repr__(self) -> str:
        return f"TriAlgebra(dim={self._dim}, products={len(self._constants)})"


def _require_dim(A: TriAlgebra, *vectors: Vector) -> None:
    for v in vectors:
        if v.dim != A.dim:
            raise DimensionMismatchError(
                f"vector of dimension {v.dim} in algebra of dimension {A.dim}"
            )


def _minor(x: Vector, y: Vector, z: Vector, cols: tuple[int, int, int]) -> LaurentPoly:
    """det of the 3x3 submatrix of rows x, y, z at the given columns."""
    a, b, c = cols
    total = LaurentPoly.zero()
    for (p, q, r), sign in (
        ((a, b, c), 1),
        ((b, c, a), 1),
        ((c, a, b), 1),
        ((b, a, c), -1),
        ((a, c, b), -1),
        ((c, b, a), -1),
    ):
        xp, yq, zr = x[p], y[q], z[r]
        if xp.is_zero or yq.is_zero or zr.is_zero:
            continue
        term = xp * yq * zr
        total = total + term if sign > 0 else total - term
    return total


def bracket(A: TriAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """[x, y, z] by trilinear expansion over the stored products."""
    _require_dim(A, x, y, z)
    result = [LaurentPoly.zero()] * A.dim
    for key, coeffs in A._constants.items():  # noqa: SLF001
        weight = _minor(x, y, z, key)
        if weight.is_zero:
            continue
        for t, c in enumerate(coeffs):
            if not c.is_zero:
                result[t] = result[t] + weight * c
    return Vector(result)


def fundamental_identity_residual(
    A: TriAlgebra, x1: Vector, x2: Vector, x3: Vector, x4: Vector, x5: Vector
) -> Vector:
    """[x1,x2,[x3,x4,x5]] minus the three-term derivation expansion."""
    lhs = bracket(A, x1, x2, bracket(A, x3, x4, x5))
    rhs = (
        bracket(A, bracket(A, x1, x2, x3), x4, x5)
        + bracket(A, x3, bracket(A, x1, x2, x4), x5)
        + bracket(A, x3, x4, bracket(A, x1, x2, x5))
    )
    return lhs - rhs


def fundamental_identity_tuples(dim: int, exhaustive: bool = False) -> Iterator[tuple[int, ...]]:
    """Basis 5-tuples to test. Both sides are skew in (x1,x2) and in (x3,x4)."""
    if exhaustive:
        yield from itertools.product(range(dim), repeat=5)
        return
    for x1, x2 in itertools.combinations(range(dim), 2):
        for x3, x4 in itertools.combinations(range(dim), 2):
            for x5 in range(dim):
                yield (x1, x2, x3, x4, x5)


def check_fundamental_identity(A: TriAlgebra, exhaustive: bool = False) -> CheckReport:
    """Violations of the fundamental identity on basis 5-tuples."""
    basis = [Vector.basis(A.dim, i) for i in range(A.dim)]
    violations: list[Violation] = []
    for idx in fundamental_identity_tuples(A.dim, exhaustive):
        residual = fundamental_identity_residual(A, *(basis[i] for i in idx))
        if not residual.is_zero:
            violations.append(Violation(idx, residual.coords))
    logger.debug("Fundamental identity: %d violations in dim %d", len(violations), A.dim)
    return make_report("fundamental-identity", violations, A.basis_names)


def _zero_matrix(n: int) -> Matrix:
    return tuple((_ZERO,) * n for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            total = LaurentPoly.zero()
            for m in range(n):
                if not a[r][m].is_zero and not b[m][c].is_zero:
                    total = total + a[r][m] * b[m][c]
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def matadd(a: Matrix, b: Matrix, sign: int = 1) -> Matrix:
    return tuple(
        tuple(x + y if sign > 0 else x - y for x, y in zip(ra, rb, strict=True))
        for ra, rb in zip(a, b, strict=True)
    )


def apply_matrix(m: Matrix, v: Vector) -> Vector:
    """Matrix-vector product; column c of m is the image of basis vector c."""
    result = []
    for row in m:
        total = LaurentPoly.zero()
        for entry, coord in zip(row, v, strict=True):
            if not entry.is_zero and not coord.is_zero:
                total = total + entry * coord
        result.append(total)
    return Vector(result)


class Representation:
    """A skew pair action of an algebra on a carrier space.

    ``action`` maps 0-based pairs i<j to the carrier matrix of rho(e_i, e_j), with
    column c holding the image of the c-th carrier basis vector.
    """

    __slots__ = ("_action", "_algebra_dim", "_carrier_dim")

    def __init__(
        self,
        algebra_dim: int,
        carrier_dim: int,
        action: Mapping[tuple[int, int], Sequence[Sequence[LaurentPoly | Coefficient]]]
        | None = None,
    ) -> None:
        stored: dict[tuple[int, int], Matrix] = {}
        for key, rows in (action or {}).items():
            i, j = key
            if not (0 <= i < j < algebra_dim):
                raise DimensionMismatchError(f"action key {key} is not an increasing pair")
            matrix = tuple(tuple(_poly(c) for c in row) for row in rows)
            if len(matrix) != carrier_dim or any(len(row) != carrier_dim for row in matrix):
                raise DimensionMismatchError(f"action {key} is not {carrier_dim}x{carrier_dim}")
            if any(not c.is_zero for row in matrix for c in row):
                stored[key] = matrix
        self._algebra_dim = algebra_dim
        self._carrier_dim = carrier_dim
        self._action = stored

    @property
    def algebra_dim(self) -> int:
        return self._algebra_dim

    @property
    def carrier_dim(self) -> int:
        return self._carrier_dim

    @property
    def action(self) -> dict[tuple[int, int], Matrix]:
        return dict(sorted(self._action.items()))

    def matrix(self, i: int, j: int) -> Matrix:
        """rho(e_i, e_j) for any pair of indices."""
        if i == j:
            return _zero_matrix(self._carrier_dim)
        key = (min(i, j), max(i, j))
        m = self._action.get(key)
        if m is None:
            return _zero_matrix(self._carrier_dim)
        if i < j:
            return m
        return tuple(tuple(-c for c in row) for row in m)

    def matrix_for(self, x: Vector, y: Vector) -> Matrix:
        """rho(x, y) for arbitrary algebra elements."""
        result = _zero_matrix(self._carrier_dim)
        for (i, j), m in self._action.items():
            weight = x[i] * y[j] - x[j] * y[i]
            if weight.is_zero:
                continue
            result = matadd(result, tuple(tuple(weight * c for c in row) for row in m))
        return result

    def act(self, x: Vector, y: Vector, v: Vector) -> Vector:
        if v.dim != self._carrier_dim:
            raise DimensionMismatchError(
                f"carrier vector of dimension {v.dim}, expected {self._carrier_dim}"
            )
        return apply_matrix(self.matrix_for(x, y), v)

    def __repr__(self) -> str:
        return f"Representation({self._algebra_dim} -> gl({self._carrier_dim}))"


def zero_rep(A: TriAlgebra, carrier_dim: int) -> Representation:
    return Representation(A.dim, carrier_dim)


def adjoint_rep(A: TriAlgebra) -> Representation:
    """ad(e_i, e_j) e_k = [e_i, e_j, e_k]."""
    n = A.dim
    action = {}
    for i, j in itertools.combinations(range(n), 2):
        columns = [A.structure(i, j, k) for k in range(n)]
        action[(i, j)] = [[columns[k][t] for k in range(n)] for t in range(n)]
    return Representation(n, n, action)


def coadjoint_rep(A: TriAlgebra) -> Representation:
    """The dual of the adjoint representation, -transpose(ad) in dual bases."""
    ad = adjoint_rep(A)
    n = A.dim
    action = {
        key: [[-m[c][r] for c in range(n)] for r in range(n)] for key, m in ad.action.items()
    }
    return Representation(n, n, action)


def check_representation(A: TriAlgebra, rho: Representation) -> CheckReport:
    """Violations of the two representation axioms on basis 4-tuples."""
    if rho.algebra_dim != A.dim:
        raise DimensionMismatchError(
            f"representation of a {rho.algebra_dim}-dimensional algebra used with dimension {A.dim}"
        )
    n = A.dim
    basis = [Vector.basis(n, i) for i in range(n)]
    violations: list[Violation] = []
    for x1, x2, x3, x4 in itertools.product(range(n), repeat=4):
        r12, r34 = rho.matrix(x1, x2), rho.matrix(x3, x4)
        b123 = bracket(A, basis[x1], basis[x2], basis[x3])
        b124 = bracket(A, basis[x1], basis[x2], basis[x4])
        commutator = matadd(matmul(r12, r34), matmul(r34, r12), -1)
        derivation = matadd(
            rho.matrix_for(b123, basis[x4]), rho.matrix_for(b124, basis[x3]), -1
        )
        residual = matadd(commutator, derivation, -1)
        flat = tuple(c for row in residual for c in row)
        if any(not c.is_zero for c in flat):
            violations.append(Violation((x1, x2, x3, x4), flat, "commutator"))
        lhs = rho.matrix_for(b123, basis[x4])
        rhs = matadd(
            matadd(matmul(r12, r34), matmul(rho.matrix(x2, x3), rho.matrix(x1, x4))),
            matmul(rho.matrix(x3, x1), rho.matrix(x2, x4)),
        )
        residual = matadd(lhs, rhs, -1)
        flat = tuple(c for row in residual for c in row)
        if any(not c.is_zero for c in flat):
            violations.append(Violation((x1, x2, x3, x4), flat, "bracket"))
    m = rho.carrier_dim
    labels = [f"({r + 1},{c + 1})" for r in range(m) for c in range(m)]
    return make_report("representation", violations, labels)


def dual_names(names: Sequence[str]) -> tuple[str, ...]:
    return tuple(f"{name}*" for name in names)


def semidirect(
    A: TriAlgebra,
    rho: Representation,
    carrier_names: Sequence[str] | None = None,
    check: bool = True,
) -> TriAlgebra:
    """The algebra on A + V with [x1+u1, x2+u2, x3+u3] = [x1,x2,x3] + rho(x1,x2)u3 + cyclic.

    Carrier basis vectors follow the algebra basis, so carrier index m is n+m.
    """
    if check:
        report = check_representation(A, rho)
        if not report.passed:
            raise NotARepresentationError("action is not a representation", report)
    n, m = A.dim, rho.carrier_dim
    if carrier_names is None:
        carrier_names = dual_names(A.basis_names) if m == n else default_basis(m, "v")
    constants: dict[tuple[int, int, int], list[LaurentPoly]] = {}
    for key, coeffs in A.nonzero_products():
        constants[key] = list(coeffs) + [_ZERO] * m
    for (i, j), matrix in rho.action.items():
        for col in range(m):
            coeffs = [_ZERO] * n + [matrix[row][col] for row in range(m)]
            constants[(i, j, n + col)] = coeffs
    result = TriAlgebra(n + m, constants, tuple(A.basis_names) + tuple(carrier_names))
    logger.debug(
        "Semidirect product of dimension %d with %d products", n + m, len(result.constants)
    )
    return result


class TwoTensor:
    """An element of A (x) A as a dim x dim coefficient matrix."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Sequence[LaurentPoly | Coefficient]]) -> None:
        matrix = tuple(tuple(_poly(c) for c in row) for row in coeffs)
        if any(len(row) != len(matrix) for row in matrix):
            raise DimensionMismatchError("two-tensor coefficients must be square")
        self._coeffs: Matrix = matrix

    @classmethod
    def zero(cls, dim: int) -> TwoTensor:
        return cls(_zero_matrix(dim))

    @property
    def dim(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> Matrix:
        return self._coeffs

    def __getitem__(self, index: tuple[int, int]) -> LaurentPoly:
        a, b = index
        return self._coeffs[a][b]

    def transpose(self) -> TwoTensor:
        n = self.dim
        return TwoTensor([[self._coeffs[c][r] for c in range(n)] for r in range(n)])

    @property
    def is_skew_symmetric(self) -> bool:
        n = self.dim
        return all(
            (self._coeffs[a][b] + self._coeffs[b][a]).is_zero for a in range(n) for b in range(a, n)
        )

    def nonzero(self) -> list[tuple[int, int, LaurentPoly]]:
        return [
            (a, b, c)
            for a, row in enumerate(self._coeffs)
            for b, c in enumerate(row)
            if not c.is_zero
        ]

    def scale(self, factor: LaurentPoly | Coefficient) -> TwoTensor:
        factor = _poly(factor)
        return TwoTensor([[factor * c for c in row] for row in self._coeffs])

    def __add__(self, other: TwoTensor) -> TwoTensor:
        return TwoTensor(matadd(self._coeffs, other._coeffs))

    def __sub__(self, other: TwoTensor) -> TwoTensor:
        return TwoTensor(matadd(self._coeffs, other._coeffs, -1))

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> TwoTensor:
        return TwoTensor([[c.specialize(assignment) for c in row] for row in self._coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoTensor):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TwoTensor(dim={self.dim}, nonzero={len(self.nonzero())})"


class FourTensor:
    """An element of the fourth tensor power, stored densely as dim**4 entries."""

    __slots__ = ("_dim", "_entries")

    def __init__(self, dim: int, entries: Sequence[LaurentPoly] | None = None) -> None:
        size = dim**4
        if entries is None:
            entries = (_ZERO,) * size
        if len(entries) != size:
            raise DimensionMismatchError(f"four-tensor of dimension {dim} needs {size} entries")
        self._dim = dim
        self._entries: tuple[LaurentPoly, ...] = tuple(entries)

    @classmethod
    def from_sparse(
        cls, dim: int, items: Mapping[tuple[int, int, int, int], LaurentPoly]
    ) -> FourTensor:
        entries = [_ZERO] * dim**4
        for index, value in items.items():
            entries[cls._offset(dim, index)] = value
        return cls(dim, entries)

    @staticmethod
    def _offset(dim: int, index: tuple[int, int, int, int]) -> int:
        a, b, c, d = index
        return ((a * dim + b) * dim + c) * dim + d

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def entries(self) -> tuple[LaurentPoly, ...]:
        return self._entries

    def __getitem__(self, index: tuple[int, int, int, int]) -> LaurentPoly:
        return self._entries[self._offset(self._dim, index)]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for e in self._entries)

    def nonzero(self) -> list[tuple[tuple[int, int, int, int], LaurentPoly]]:
        """Nonzero entries in lexicographic index order."""
        n = self._dim
        return [
            (index, self._entries[offset])
            for offset, index in enumerate(itertools.product(range(n), repeat=4))
            if not self._entries[offset].is_zero
        ]

    def scale(self, factor: LaurentPoly | Coefficient) -> FourTensor:
        factor = _poly(factor)
        return FourTensor(self._dim, [factor * e for e in self._entries])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourTensor):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._dim, self._entries))

    def __repr__(self) -> str:
        return f"FourTensor(dim={self._dim}, nonzero={len(self.nonzero())})"
