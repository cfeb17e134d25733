"""3-Pre-Lie algebras: axioms, sub-adjacent bracket, induction from O-operators."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

from triop.exceptions import DimensionMismatchError, NotAnOOperatorError
from triop.ooperator import ParamOperator, check_o_operator_direct, check_o_operator_relative
from triop.scalar import Coefficient, LaurentPoly, Scalar
from triop.trisys import (
    CheckReport,
    Representation,
    TriAlgebra,
    Vector,
    Violation,
    bracket,
    default_basis,
    make_report,
)

logger = logging.getLogger(__name__)

_ZERO = LaurentPoly.zero()

DERIVATION_AXIOM = "derivation"
CYCLIC_AXIOM = "cyclic"


class PreLieAlgebra:
    """A ternary product skew in its first two slots.

    ``constants`` maps 0-based (i, j, k) with i<j to the coordinates of {e_i, e_j, e_k}.
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
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise DimensionMismatchError(f"product key {key} needs i<j inside dimension {dim}")
            if len(coeffs) != dim:
                raise DimensionMismatchError(f"product {key} has {len(coeffs)} coordinates")
            vector = tuple(LaurentPoly.coerce(c) for c in coeffs)
            if any(not c.is_zero for c in vector):
                stored[key] = vector
        self._dim = dim
        self._basis_names = names
        self._constants = stored

    @classmethod
    def zero(cls, dim: int) -> PreLieAlgebra:
        return cls(dim)

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

    def structure(self, i: int, j: int, k: int) -> tuple[LaurentPoly, ...]:
        """Coordinates of {e_i, e_j, e_k} for any order of the first two slots."""
        if i == j:
            return (_ZERO,) * self._dim
        if i < j:
            return self._constants.get((i, j, k), (_ZERO,) * self._dim)
        coeffs = self._constants.get((j, i, k))
        if coeffs is None:
            return (_ZERO,) * self._dim
        return tuple(-c for c in coeffs)

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> PreLieAlgebra:
        return PreLieAlgebra(
            self._dim,
            {key: [c.specialize(assignment) for c in v] for key, v in self._constants.items()},
            self._basis_names,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PreLieAlgebra):
            return NotImplemented
        return self._dim == other._dim and self._constants == other._constants

    def __hash__(self) -> int:
        return hash((self._dim, frozenset(self._constants.items())))

    def __repr__(self) -> str:
        return f"PreLieAlgebra(dim={self._dim}, products={len(self._constants)})"


def pre_lie_product(P: PreLieAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """{x, y, z} by trilinear expansion."""
    for v in (x, y, z):
        if v.dim != P.dim:
            raise DimensionMismatchError(f"vector of dimension {v.dim} in dimension {P.dim}")
    result = [LaurentPoly.zero()] * P.dim
    for (i, j, k), coeffs in P._constants.items():  # noqa: SLF001
        if z[k].is_zero:
            continue
        weight = (x[i] * y[j] - x[j] * y[i]) * z[k]
        if weight.is_zero:
            continue
        for t, c in enumerate(coeffs):
            if not c.is_zero:
                result[t] = result[t] + weight * c
    return Vector(result)


def sub_adjacent(P: PreLieAlgebra) -> TriAlgebra:
    """[x,y,z]^c = {x,y,z} + {y,z,x} + {z,x,y}."""
    constants = {}
    for i, j, k in itertools.combinations(range(P.dim), 3):
        cyclic = zip(P.structure(i, j, k), P.structure(j, k, i), P.structure(k, i, j), strict=True)
        coeffs = [a + b + c for a, b, c in cyclic]
        constants[(i, j, k)] = coeffs
    return TriAlgebra(P.dim, constants, P.basis_names)


def derivation_residual(
    P: PreLieAlgebra, C: TriAlgebra, x1: Vector, x2: Vector, x3: Vector, x4: Vector, x5: Vector
) -> Vector:
    """{x1,x2,{x3,x4,x5}} - {[x1,x2,x3]^c,x4,x5} - {x3,[x1,x2,x4]^c,x5} - {x3,x4,{x1,x2,x5}}."""
    lhs = pre_lie_product(P, x1, x2, pre_lie_product(P, x3, x4, x5))
    rhs = (
        pre_lie_product(P, bracket(C, x1, x2, x3), x4, x5)
        + pre_lie_product(P, x3, bracket(C, x1, x2, x4), x5)
        + pre_lie_product(P, x3, x4, pre_lie_product(P, x1, x2, x5))
    )
    return lhs - rhs


def cyclic_residual(
    P: PreLieAlgebra, C: TriAlgebra, x1: Vector, x2: Vector, x3: Vector, x4: Vector, x5: Vector
) -> Vector:
    """{[x1,x2,x3]^c,x4,x5} minus the cyclic sum of {x1,x2,{x3,x4,x5}}."""
    lhs = pre_lie_product(P, bracket(C, x1, x2, x3), x4, x5)
    rhs = (
        pre_lie_product(P, x1, x2, pre_lie_product(P, x3, x4, x5))
        + pre_lie_product(P, x2, x3, pre_lie_product(P, x1, x4, x5))
        + pre_lie_product(P, x3, x1, pre_lie_product(P, x2, x4, x5))
    )
    return lhs - rhs


def _derivation_tuples(n: int, exhaustive: bool) -> Iterator[tuple[int, ...]]:
    if exhaustive:
        yield from itertools.product(range(n), repeat=5)
        return
    # skew in (x1, x2) and in (x3, x4)
    for x1, x2 in itertools.combinations(range(n), 2):
        for x3, x4 in itertools.combinations(range(n), 2):
            for x5 in range(n):
                yield (x1, x2, x3, x4, x5)


def _cyclic_tuples(n: int, exhaustive: bool) -> Iterator[tuple[int, ...]]:
    if exhaustive:
        yield from itertools.product(range(n), repeat=5)
        return
    # fully skew in (x1, x2, x3)
    for x1, x2, x3 in itertools.combinations(range(n), 3):
        for x4, x5 in itertools.product(range(n), repeat=2):
            yield (x1, x2, x3, x4, x5)


def check_pre_lie_axioms(P: PreLieAlgebra, exhaustive: bool = False) -> CheckReport:
    """Violations of the two 3-Pre-Lie identities on basis 5-tuples."""
    C = sub_adjacent(P)
    n = P.dim
    basis = [Vector.basis(n, i) for i in range(n)]
    violations: list[Violation] = []
    for idx in _derivation_tuples(n, exhaustive):
        residual = derivation_residual(P, C, *(basis[i] for i in idx))
        if not residual.is_zero:
            violations.append(Violation(idx, residual.coords, DERIVATION_AXIOM))
    for idx in _cyclic_tuples(n, exhaustive):
        residual = cyclic_residual(P, C, *(basis[i] for i in idx))
        if not residual.is_zero:
            violations.append(Violation(idx, residual.coords, CYCLIC_AXIOM))
    return make_report("3-pre-lie", violations, P.basis_names)


def check_pre_lie_by_constants(P: PreLieAlgebra) -> CheckReport:
    """The same identities as sums over structure constants, on all 5-tuples (s,u,i,j,k)."""
    n = P.dim
    C = [[[P.structure(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]

    def cyc(s: int, u: int, i: int, t: int) -> LaurentPoly:
        return C[s][u][i][t] + C[u][i][s][t] + C[i][s][u][t]

    violations: list[Violation] = []
    for s, u, i, j, k in itertools.product(range(n), repeat=5):
        first = []
        second = []
        for l in range(n):  # noqa: E741
            total_first = LaurentPoly.zero()
            total_second = LaurentPoly.zero()
            for t in range(n):
                cyc_i = cyc(s, u, i, t)
                cyc_j = cyc(s, u, j, t)
                nested = C[i][j][k][t] * C[s][u][t][l]
                total_first = (
                    total_first
                    + nested
                    - cyc_i * C[t][j][k][l]
                    - cyc_j * C[i][t][k][l]
                    - C[s][u][k][t] * C[i][j][t][l]
                )
                total_second = (
                    total_second
                    + cyc_i * C[t][j][k][l]
                    - nested
                    - C[s][j][k][t] * C[u][i][t][l]
                    - C[u][j][k][t] * C[i][s][t][l]
                )
            first.append(total_first)
            second.append(total_second)
        if any(not c.is_zero for c in first):
            violations.append(Violation((s, u, i, j, k), tuple(first), DERIVATION_AXIOM))
        if any(not c.is_zero for c in second):
            violations.append(Violation((s, u, i, j, k), tuple(second), CYCLIC_AXIOM))
    return make_report("3-pre-lie-constants", violations, P.basis_names)


def induce_from_operator(A: TriAlgebra, T: ParamOperator, check: bool = True) -> PreLieAlgebra:
    """{e_i, e_j, e_k} = [Te_i, Te_j, e_k]."""
    if check:
        report = check_o_operator_direct(A, T)
        if not report.passed:
            raise NotAnOOperatorError(f"{T.name or 'operator'} is not an O-operator", report)
    n = A.dim
    images = [T.image(i) for i in range(n)]
    basis = [Vector.basis(n, i) for i in range(n)]
    constants = {
        (i, j, k): bracket(A, images[i], images[j], basis[k]).coords
        for i, j in itertools.combinations(range(n), 2)
        for k in range(n)
    }
    return PreLieAlgebra(n, constants, A.basis_names)


def induce_from_representation(
    A: TriAlgebra,
    rho: Representation,
    T: ParamOperator,
    check: bool = True,
    carrier_names: Sequence[str] | None = None,
) -> PreLieAlgebra:
    """{u, v, w} = rho(Tu, Tv) w on the carrier space."""
    if check:
        report = check_o_operator_relative(A, rho, T)
        if not report.passed:
            raise NotAnOOperatorError(
                "operator is not an O-operator for the representation", report
            )
    m = rho.carrier_dim
    images = [T.image(i) for i in range(m)]
    carrier = [Vector.basis(m, i) for i in range(m)]
    constants = {
        (i, j, k): rho.act(images[i], images[j], carrier[k]).coords
        for i, j in itertools.combinations(range(m), 2)
        for k in range(m)
    }
    return PreLieAlgebra(m, constants, carrier_names)


@dataclass(frozen=True, slots=True)
class DiffEntry:
    """One coordinate where two tables disagree; indices are 0-based."""

    key: tuple[int, int, int]
    coordinate: int
    computed: LaurentPoly
    transcribed: LaurentPoly

    @property
    def label(self) -> str:
        i, j, k = (x + 1 for x in self.key)
        return f"{{e{i},e{j},e{k}}}[e{self.coordinate + 1}]"


@dataclass(frozen=True, slots=True)
class TableDiff:
    entries: tuple[DiffEntry, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def keys(self) -> tuple[tuple[int, int, int], ...]:
        """Distinct 1-based product keys that disagree."""
        keys = {(e.key[0] + 1, e.key[1] + 1, e.key[2] + 1) for e in self.entries}
        return tuple(sorted(keys))

    def summary(self) -> str:
        return "; ".join(
            f"{e.label}: computed {e.computed}, transcribed {e.transcribed}" for e in self.entries
        )


def table_diff(computed: PreLieAlgebra, transcribed: PreLieAlgebra) -> TableDiff:
    """Every product coordinate where the two tables differ."""
    if computed.dim != transcribed.dim:
        raise DimensionMismatchError(
            f"cannot diff tables of dimension {computed.dim} and {transcribed.dim}"
        )
    keys = sorted(set(computed.constants) | set(transcribed.constants))
    entries = []
    for key in keys:
        left = computed.structure(*key)
        right = transcribed.structure(*key)
        for t, (a, b) in enumerate(zip(left, right, strict=True)):
            if a != b:
                entries.append(DiffEntry(key, t, a, b))
    return TableDiff(tuple(entries))


def generic_pre_lie(dim: int) -> PreLieAlgebra:
    """The product with an independent parameter C<i><j><k>_<t> per constant, i<j."""
    constants = {}
    for i, j in itertools.combinations(range(dim), 2):
        for k in range(dim):
            constants[(i, j, k)] = [
                LaurentPoly.variable(f"C{i + 1}{j + 1}{k + 1}_{t + 1}") for t in range(dim)
            ]
    return PreLieAlgebra(dim, constants)


@dataclass(frozen=True)
class Dim2Result:
    """Constraints the 3-Pre-Lie identities put on a generic 2-dimensional product."""

    parameters: tuple[str, ...]
    constraints: tuple[LaurentPoly, ...]
    is_trivial_only: bool | None
    witness: dict[str, Scalar] | None

    @property
    def agrees_with_triviality_claim(self) -> bool:
        return self.is_trivial_only is True


def _collect_constraints(report: CheckReport) -> tuple[LaurentPoly, ...]:
    found: list[LaurentPoly] = []
    seen: set[LaurentPoly] = set()
    for violation in report.violations:
        for _, poly in violation.nonzero():
            if poly in seen or -poly in seen:
                continue
            seen.add(poly)
            found.append(poly)
    return tuple(sorted(found, key=str))


def dim2_experiment() -> Dim2Result:
    """Expand both identities for the generic 2-dimensional product and solve for triviality.

    The solution set is probed on assignments in {-1, 0, 1}; a nonzero solution is a
    witness that nontrivial products exist. No witness leaves the verdict open.
    """
    P = generic_pre_lie(2)
    parameters = tuple(sorted({p for v in P.constants.values() for c in v for p in c.parameters()}))
    constraints = _collect_constraints(check_pre_lie_axioms(P, exhaustive=True))
    logger.debug(
        "dim-2 experiment: %d constraints on %d parameters", len(constraints), len(parameters)
    )
    witness = None
    for values in itertools.product((0, 1, -1), repeat=len(parameters)):
        if not any(values):
            continue
        assignment = dict(zip(parameters, values, strict=True))
        if not any(c.substitute(assignment) for c in constraints):
            witness = {name: Scalar(value) for name, value in assignment.items()}
            break
    verdict = False if witness is not None else None
    return Dim2Result(parameters, constraints, verdict, witness)
