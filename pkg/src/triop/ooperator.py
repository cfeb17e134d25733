"""O-operators: the defining condition, its structure-constant form, family matching.

A ``ParamOperator`` stores its matrix row by row: row i holds the coordinates of
T(e_i). Residuals of the O-operator condition are reported as
``T(sum of cyclic brackets) - [Te_i, Te_j, Te_k]``.
"""

from __future__ import annotations

import itertools
import logging
import random
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from triop.exceptions import (
    DimensionMismatchError,
    PreconditionError,
    SubstitutionError,
)
from triop.expr import parse_expr
from triop.scalar import Coefficient, LaurentPoly, Scalar, active_d, quadratic_field
from triop.trisys import (
    CheckReport,
    Representation,
    TriAlgebra,
    Vector,
    Violation,
    apply_matrix,
    bracket,
    make_report,
)

logger = logging.getLogger(__name__)


def _poly(value: LaurentPoly | Coefficient | str) -> LaurentPoly:
    if isinstance(value, str):
        return parse_expr(value)
    return LaurentPoly.coerce(value)


class ParamOperator:
    """A linear map given by a matrix of Laurent polynomial entries.

    Rows index the source basis and columns the target basis, so a square operator
    acts on one algebra and a rectangular one maps a carrier space into an algebra.
    Side conditions are expressions asserted nonzero.
    """

    __slots__ = ("_entries", "_name", "_side_conditions")

    def __init__(
        self,
        entries: Sequence[Sequence[LaurentPoly | Coefficient | str]],
        side_conditions: Iterable[LaurentPoly | Coefficient | str] = (),
        name: str = "",
    ) -> None:
        rows = tuple(tuple(_poly(c) for c in row) for row in entries)
        if not rows or any(len(row) != len(rows[0]) for row in rows) or not rows[0]:
            raise DimensionMismatchError("operator matrix must be a nonempty rectangle")
        self._entries = rows
        self._side_conditions = tuple(_poly(c) for c in side_conditions)
        self._name = name
        covered = {
            param
            for cond in self._side_conditions
            if cond.is_term
            for mono, _ in cond.terms()
            for param, exp in mono.powers
            if exp > 0
        }
        missing = sorted(
            {p for row in rows for c in row for p in c.negative_parameters()} - covered
        )
        if missing:
            raise PreconditionError(
                f"parameters {', '.join(missing)} occur in denominators without a side condition"
            )

    @classmethod
    def zero(cls, dim: int) -> ParamOperator:
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> ParamOperator:
        return cls([[1 if r == c else 0 for c in range(dim)] for r in range(dim)])

    @classmethod
    def generic(cls, dim: int, prefix: str = "a") -> ParamOperator:
        """The operator with an independent parameter a<row><col> in every entry."""
        return cls(
            [
                [LaurentPoly.variable(f"{prefix}{r + 1}{c + 1}") for c in range(dim)]
                for r in range(dim)
            ]
        )

    @property
    def name(self) -> str:
        return self._name

    @property
    def entries(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        return self._entries

    @property
    def side_conditions(self) -> tuple[LaurentPoly, ...]:
        return self._side_conditions

    @property
    def source_dim(self) -> int:
        return len(self._entries)

    @property
    def target_dim(self) -> int:
        return len(self._entries[0])

    @property
    def is_square(self) -> bool:
        return self.source_dim == self.target_dim

    @property
    def dim(self) -> int:
        if not self.is_square:
            raise DimensionMismatchError(
                f"operator is {self.source_dim}x{self.target_dim}, not square"
            )
        return self.source_dim

    def parameters(self) -> frozenset[str]:
        names: set[str] = set()
        for row in self._entries:
            for c in row:
                names.update(c.parameters())
        return frozenset(names)

    def image(self, index: int) -> Vector:
        """T(e_index)."""
        return Vector(self._entries[index])

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.source_dim:
            raise DimensionMismatchError(
                f"operator on dimension {self.source_dim} applied to dimension {v.dim}"
            )
        columns = tuple(
            tuple(self._entries[r][c] for r in range(self.source_dim))
            for c in range(self.target_dim)
        )
        return apply_matrix(columns, v)

    def admits(self, assignment: Mapping[str, Coefficient]) -> bool:
        """True if every side condition is nonzero under a full assignment."""
        try:
            return all(cond.substitute(assignment) for cond in self._side_conditions)
        except SubstitutionError:
            return False

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> ParamOperator:
        """Substitute parameters, enforcing side conditions that become constant."""
        values = {k: LaurentPoly.coerce(v) for k, v in assignment.items()}
        entries = [[c.specialize(values) for c in row] for row in self._entries]
        remaining = []
        for cond in self._side_conditions:
            value = cond.specialize(values)
            if value.is_zero:
                raise SubstitutionError(f"side condition {cond} != 0 is violated")
            if not value.is_constant:
                remaining.append(value)
        return ParamOperator(entries, remaining, self._name)

    def with_entry(
        self, row: int, col: int, value: LaurentPoly | Coefficient | str
    ) -> ParamOperator:
        entries = [list(r) for r in self._entries]
        entries[row][col] = _poly(value)
        return ParamOperator(entries, self._side_conditions, self._name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParamOperator):
            return NotImplemented
        return self._entries == other._entries and self._side_conditions == other._side_conditions

    def __hash__(self) -> int:
        return hash((self._entries, self._side_conditions))

    def __repr__(self) -> str:
        label = f"{self._name} " if self._name else ""
        return f"ParamOperator({label}{self.source_dim}x{self.target_dim})"


class FamilyCatalogue:
    """An ordered, name-unique collection of operator families."""

    __slots__ = ("_families",)

    def __init__(self, families: Iterable[ParamOperator]) -> None:
        items = tuple(families)
        names = [f.name for f in items]
        if len(set(names)) != len(names):
            raise ValueError("family names must be unique")
        self._families = items

    def __len__(self) -> int:
        return len(self._families)

    def __iter__(self) -> Iterator[ParamOperator]:
        return iter(self._families)

    def __contains__(self, name: object) -> bool:
        return any(f.name == name for f in self._families)

    @property
    def names(self) -> list[str]:
        return [f.name for f in self._families]

    def get(self, name: str) -> ParamOperator:
        for family in self._families:
            if family.name == name:
                return family
        raise KeyError(name)

    def replace(self, family: ParamOperator) -> FamilyCatalogue:
        return FamilyCatalogue(family if f.name == family.name else f for f in self._families)


def _require_square(A: TriAlgebra, T: ParamOperator) -> None:
    if not T.is_square or T.dim != A.dim:
        raise DimensionMismatchError(
            f"operator is {T.source_dim}x{T.target_dim}, algebra has dimension {A.dim}"
        )


def check_o_operator_direct(A: TriAlgebra, T: ParamOperator) -> CheckReport:
    """The O-operator condition for the adjoint action on basis triples i<j<k."""
    _require_square(A, T)
    images = [T.image(i) for i in range(A.dim)]
    basis = [Vector.basis(A.dim, i) for i in range(A.dim)]
    violations = []
    for i, j, k in itertools.combinations(range(A.dim), 3):
        lhs = bracket(A, images[i], images[j], images[k])
        inner = (
            bracket(A, images[i], images[j], basis[k])
            + bracket(A, images[j], images[k], basis[i])
            + bracket(A, images[k], images[i], basis[j])
        )
        residual = T.apply(inner) - lhs
        if not residual.is_zero:
            violations.append(Violation((i, j, k), residual.coords))
    return make_report("o-operator", violations, A.basis_names)


def _dense_constants(A: TriAlgebra) -> list[list[list[tuple[LaurentPoly, ...]]]]:
    n = A.dim
    return [[[A.structure(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]


def check_o_operator_expanded(A: TriAlgebra, T: ParamOperator) -> CheckReport:
    """The same condition computed from the structure-constant sums.

    For each m the residual coordinate is
    sum over s,v,t of a_iv a_js a_tm C_vsk^t + a_kv a_is a_tm C_vsj^t
    + a_js a_kv a_tm C_svi^t - a_it a_js a_kv C_tsv^m.
    """
    _require_square(A, T)
    n = A.dim
    a = T.entries
    C = _dense_constants(A)
    violations = []
    for i, j, k in itertools.combinations(range(n), 3):
        residual = []
        for m in range(n):
            total = LaurentPoly.zero()
            for s, v, t in itertools.product(range(n), repeat=3):
                c_tsv = C[t][s][v][m]
                if not c_tsv.is_zero:
                    total = total - a[i][t] * a[j][s] * a[k][v] * c_tsv
                if a[t][m].is_zero:
                    continue
                c_vsk = C[v][s][k][t]
                if not c_vsk.is_zero:
                    total = total + a[i][v] * a[j][s] * a[t][m] * c_vsk
                c_vsj = C[v][s][j][t]
                if not c_vsj.is_zero:
                    total = total + a[k][v] * a[i][s] * a[t][m] * c_vsj
                c_svi = C[s][v][i][t]
                if not c_svi.is_zero:
                    total = total + a[j][s] * a[k][v] * a[t][m] * c_svi
            residual.append(total)
        if any(not r.is_zero for r in residual):
            violations.append(Violation((i, j, k), tuple(residual)))
    return make_report("o-operator-expanded", violations, A.basis_names)


def check_o_operator_relative(A: TriAlgebra, rho: Representation, T: ParamOperator) -> CheckReport:
    """The O-operator condition for T: V -> A with respect to a representation on V.

    Residual on carrier triples i<j<k is
    T(rho(Tu_i,Tu_j)u_k + rho(Tu_j,Tu_k)u_i + rho(Tu_k,Tu_i)u_j) - [Tu_i,Tu_j,Tu_k].
    """
    if rho.algebra_dim != A.dim or T.source_dim != rho.carrier_dim or T.target_dim != A.dim:
        raise DimensionMismatchError(
            f"operator {T.source_dim}x{T.target_dim} does not map a "
            f"{rho.carrier_dim}-dimensional carrier into dimension {A.dim}"
        )
    m = rho.carrier_dim
    images = [T.image(i) for i in range(m)]
    carrier = [Vector.basis(m, i) for i in range(m)]
    violations = []
    for i, j, k in itertools.combinations(range(m), 3):
        lhs = bracket(A, images[i], images[j], images[k])
        inner = (
            rho.act(images[i], images[j], carrier[k])
            + rho.act(images[j], images[k], carrier[i])
            + rho.act(images[k], images[i], carrier[j])
        )
        residual = T.apply(inner) - lhs
        if not residual.is_zero:
            violations.append(Violation((i, j, k), residual.coords))
    return make_report("o-operator-relative", violations, A.basis_names)


def specialized_conditions_3d(T: ParamOperator) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """The three cubic conditions for an operator on the algebra [e1,e2,e3] = e1.

    With s the sum of the principal 2x2 minors, the conditions are
    a12(a11a21 - a21a33 + a23a31) + a13(a21a32 + a11a31 - a22a31) - a11^2(a22 + a33),
    a12*s and a13*s. The O-operator residual is (-first, second, third).
    """
    if not T.is_square or T.dim != 3:
        raise DimensionMismatchError(f"expected a 3x3 operator, got {T.source_dim}x{T.target_dim}")
    (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = T.entries
    s = a11 * a22 - a12 * a21 - a31 * a13 + a33 * a11 + a22 * a33 - a23 * a32
    first = (
        a12 * (a11 * a21 - a21 * a33 + a23 * a31)
        + a13 * (a21 * a32 + a11 * a31 - a22 * a31)
        - a11 * a11 * (a22 + a33)
    )
    return first, a12 * s, a13 * s


def verify_catalogue(A: TriAlgebra, catalogue: FamilyCatalogue) -> dict[str, CheckReport]:
    """Symbolic O-operator check of every family, parameters left free."""
    if len(catalogue) == 0:
        logger.warning("Empty catalogue: nothing to verify")
        return {}
    results: dict[str, CheckReport] = {}
    for family in catalogue:
        results[family.name] = check_o_operator_direct(A, family)
        logger.debug("%s: %s", family.name, "pass" if results[family.name].passed else "fail")
    return results


@dataclass(frozen=True, slots=True)
class _SolveStep:
    row: int
    col: int
    parameter: str
    coeff: Scalar
    offset: Scalar


def _bare_linear(entry: LaurentPoly) -> tuple[str, Scalar, Scalar] | None:
    """(p, c, k) if entry is c*p + k with constant c and k."""
    offset = Scalar(0)
    found: tuple[str, Scalar] | None = None
    for mono, coeff in entry.terms():
        if mono.is_one:
            offset = coeff
        elif len(mono.powers) == 1 and mono.powers[0][1] == 1 and found is None:
            found = (mono.powers[0][0], coeff)
        else:
            return None
    if found is None:
        return None
    return found[0], found[1], offset


class FamilyMatcher:
    """Decides membership of a constant matrix in one family.

    Parameters are read off entries of the form c*p + k in row-major order; every
    other entry and every side condition is then checked under that assignment.
    """

    def __init__(self, family: ParamOperator) -> None:
        self.family = family
        steps: list[_SolveStep] = []
        solved: set[str] = set()
        for r, row in enumerate(family.entries):
            for c, entry in enumerate(row):
                linear = _bare_linear(entry)
                if linear is not None and linear[0] not in solved:
                    steps.append(_SolveStep(r, c, *linear))
                    solved.add(linear[0])
        used = {(step.row, step.col) for step in steps}
        self._steps = tuple(steps)
        self._checks = tuple(
            (r, c, entry)
            for r, row in enumerate(family.entries)
            for c, entry in enumerate(row)
            if (r, c) not in used
        )
        self.supported = solved == set(family.parameters())
        if not self.supported:
            logger.warning("Family %s has parameters that cannot be read off entries", family.name)

    def match(self, matrix: Sequence[Sequence[Scalar]]) -> dict[str, Scalar] | None:
        if not self.supported:
            return None
        assignment = {
            step.parameter: (matrix[step.row][step.col] - step.offset) / step.coeff
            for step in self._steps
        }
        try:
            for r, c, entry in self._checks:
                if entry.substitute(assignment) != matrix[r][c]:
                    return None
        except SubstitutionError:
            return None
        if not self.family.admits(assignment):
            return None
        return dict(sorted(assignment.items()))


def _constant_matrix(matrix: Sequence[Sequence[Coefficient]]) -> list[list[Scalar]]:
    rows = [[Scalar.coerce(v) for v in row] for row in matrix]
    if len(rows) != 3 or any(len(row) != 3 for row in rows):
        raise DimensionMismatchError("classification expects a 3x3 matrix")
    return rows


def _matchers(catalogue: FamilyCatalogue | None) -> list[FamilyMatcher]:
    if catalogue is None:
        from triop.catalogue import load_catalogue  # noqa: PLC0415

        catalogue = load_catalogue()
    return [FamilyMatcher(family) for family in catalogue]


def classify_matrix(
    matrix: Sequence[Sequence[Coefficient]],
    catalogue: FamilyCatalogue | None = None,
    *,
    matchers: Sequence[FamilyMatcher] | None = None,
) -> list[tuple[str, dict[str, Scalar]]]:
    """Every family containing the matrix, with the parameter values that produce it."""
    rows = _constant_matrix(matrix)
    conditions = specialized_conditions_3d(ParamOperator(rows))
    if any(not c.is_zero for c in conditions):
        raise PreconditionError(
            "matrix does not satisfy the O-operator conditions: "
            + ", ".join(str(c.constant_value()) for c in conditions)
        )
    matches = []
    for matcher in matchers if matchers is not None else _matchers(catalogue):
        assignment = matcher.match(rows)
        if assignment is not None:
            matches.append((matcher.family.name, assignment))
    return matches


_NAME_RE = re.compile(r"(\D*)(\d*)(.*)")

IntMatrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
_CompiledPoly = list[tuple[int | Fraction, tuple[tuple[int, int], ...]]]


def _compile_conditions() -> list[_CompiledPoly]:
    """Integer evaluators for the generic conditions, entries indexed row-major."""
    index = {f"a{r + 1}{c + 1}": 3 * r + c for r in range(3) for c in range(3)}
    compiled = []
    for poly in specialized_conditions_3d(ParamOperator.generic(3)):
        terms: _CompiledPoly = []
        for mono, coeff in poly.terms():
            value: int | Fraction = coeff.rat
            if value.denominator == 1:
                value = value.numerator
            terms.append((value, tuple((index[name], exp) for name, exp in mono.powers)))
        compiled.append(terms)
    return compiled


def _vanishes(compiled: list[_CompiledPoly], values: Sequence[int]) -> bool:
    for terms in compiled:
        total: int | Fraction = 0
        for coeff, powers in terms:
            term = coeff
            for idx, exp in powers:
                term *= values[idx] ** exp
                if not term:
                    break
            total += term
        if total:
            return False
    return True


def _as_matrix(values: Sequence[int]) -> IntMatrix:
    return (
        (values[0], values[1], values[2]),
        (values[3], values[4], values[5]),
        (values[6], values[7], values[8]),
    )


def _search_prefixes(
    d: int, bound: int, prefixes: Sequence[tuple[int, int, int]]
) -> list[tuple[IntMatrix, tuple[str, ...]]]:
    """Enumerate all matrices with the given first rows; run in worker processes."""
    with quadratic_field(d):
        compiled = _compile_conditions()
        matchers = _matchers(None)
        span = range(-bound, bound + 1)
        found = []
        for prefix in prefixes:
            for rest in itertools.product(span, repeat=6):
                values = prefix + rest
                if not _vanishes(compiled, values):
                    continue
                matrix = _as_matrix(values)
                rows = _constant_matrix(matrix)
                names = tuple(m.family.name for m in matchers if m.match(rows) is not None)
                found.append((matrix, names))
        return found


@dataclass(frozen=True)
class GridSearchResult:
    """Outcome of enumerating every integer 3x3 matrix with entries in [-bound, bound]."""

    bound: int
    examined: int
    solutions: tuple[tuple[IntMatrix, tuple[str, ...]], ...]
    family_counts: dict[str, int] = field(default_factory=dict)
    audited: int = 0
    audit_disagreements: tuple[IntMatrix, ...] = ()

    @property
    def solution_count(self) -> int:
        return len(self.solutions)

    @property
    def unmatched(self) -> tuple[IntMatrix, ...]:
        return tuple(matrix for matrix, names in self.solutions if not names)


def _chunks(items: Sequence[tuple[int, int, int]], count: int) -> list[list[tuple[int, int, int]]]:
    count = max(1, min(count, len(items)))
    return [list(items[i::count]) for i in range(count)]


def grid_completeness_search(
    bound: int, jobs: int = 1, audit: int = 0, seed: int = 0
) -> GridSearchResult:
    """Filter all (2B+1)^9 integer matrices by the cubic conditions and classify survivors.

    ``audit`` matrices drawn with ``seed`` are re-checked with the direct condition.
    """
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    d = active_d()
    span = range(-bound, bound + 1)
    prefixes = list(itertools.product(span, repeat=3))
    chunks = _chunks(prefixes, jobs)
    logger.debug("Grid search bound=%d over %d chunks with %d jobs", bound, len(chunks), jobs)
    found: list[tuple[IntMatrix, tuple[str, ...]]] = []
    if jobs <= 1:
        for chunk in chunks:
            found.extend(_search_prefixes(d, bound, chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_search_prefixes, [d] * len(chunks), [bound] * len(chunks), chunks)
            for part in parts:
                found.extend(part)
    found.sort()
    counts: dict[str, int] = {}
    for _, names in found:
        for name in names:
            counts[name] = counts.get(name, 0) + 1
    disagreements = _audit(bound, audit, seed, {matrix for matrix, _ in found})
    return GridSearchResult(
        bound=bound,
        examined=len(span) ** 9,
        solutions=tuple(found),
        family_counts=dict(sorted(counts.items(), key=lambda item: natural_key(item[0]))),
        audited=audit,
        audit_disagreements=disagreements,
    )


def _audit(bound: int, samples: int, seed: int, survivors: set[IntMatrix]) -> tuple[IntMatrix, ...]:
    if samples <= 0:
        return ()
    rng = random.Random(seed)  # noqa: S311
    survivor_list = sorted(survivors)
    a3 = TriAlgebra.a3()
    disagreements = []
    for n in range(samples):
        if survivor_list and n % 2 == 0:
            matrix = rng.choice(survivor_list)
        else:
            matrix = _as_matrix([rng.randint(-bound, bound) for _ in range(9)])
        passed = check_o_operator_direct(a3, ParamOperator(matrix)).passed
        if passed != (matrix in survivors):
            disagreements.append(matrix)
    if disagreements:
        logger.warning("Grid audit found %d disagreements", len(disagreements))
    return tuple(sorted(set(disagreements)))


def natural_key(name: str) -> tuple[str, int, str]:
    """Sort key placing O2 before O10 and O29 before O29a."""
    match = _NAME_RE.fullmatch(name)
    if match is None:
        return name, 0, ""
    head, digits, suffix = match.groups()
    return head, int(digits) if digits else 0, suffix
