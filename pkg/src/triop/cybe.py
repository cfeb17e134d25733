"""The 3-Lie classical Yang-Baxter bracket and tensors built from O-operators."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from triop.catalogue import CYBE_ROWS, family_name, load_catalogue, transcribed_rows
from triop.exceptions import DimensionMismatchError
from triop.ooperator import ParamOperator, natural_key
from triop.scalar import LaurentPoly, active_d, quadratic_field
from triop.trisys import (
    FourTensor,
    TriAlgebra,
    TwoTensor,
    coadjoint_rep,
    permutation_sign,
    semidirect,
)

logger = logging.getLogger(__name__)

Index4 = tuple[int, int, int, int]


def switch12(r: TwoTensor) -> TwoTensor:
    """x (x) y -> y (x) x."""
    return r.transpose()


def semidirect_a3_dual() -> TriAlgebra:
    """The 6-dimensional algebra A3 + A3* under the coadjoint action."""
    a3 = TriAlgebra.a3()
    return semidirect(a3, coadjoint_rep(a3))


def tensor_from_operator(S: TriAlgebra, T: ParamOperator) -> TwoTensor:
    """r = sum_i e_i* (x) T e_i - T e_i (x) e_i* on a semidirect product with its dual.

    The dual basis of S occupies indices n..2n-1, following the algebra basis.
    """
    n = T.dim
    if S.dim != 2 * n:
        raise DimensionMismatchError(
            f"operator of dimension {n} needs an algebra of dimension {2 * n}, got {S.dim}"
        )
    coeffs = [[LaurentPoly.zero()] * (2 * n) for _ in range(2 * n)]
    for i, row in enumerate(T.entries):
        for m, value in enumerate(row):
            coeffs[n + i][m] = value
            coeffs[m][n + i] = -value
    return TwoTensor(coeffs)


def _insert(slot: int, t: int, others: tuple[int, int, int]) -> Index4:
    x, y, z = others
    return ((t, x, y, z), (x, t, y, z), (x, y, t, z), (x, y, z, t))[slot]


SignedProduct = tuple[tuple[int, int, int], int, tuple[LaurentPoly, ...]]


def _signed_products(A: TriAlgebra) -> list[SignedProduct]:
    """Every ordered triple with a nonzero bracket, its sign and the stored coefficients."""
    products = []
    for key, coeffs in A.nonzero_products():
        for perm in itertools.permutations(key):
            products.append((perm, permutation_sign(perm), coeffs))
    products.sort(key=lambda item: item[0])
    return products


def yang_baxter_bracket(A: TriAlgebra, r: TwoTensor) -> FourTensor:
    """[[r, r, r]] over the basis expansion r = sum R_ab e_a (x) e_b.

    With three copies e_a (x) e_b, e_c (x) e_d, e_e (x) e_f the four terms are
    [e_a,e_c,e_e] (x) e_b (x) e_d (x) e_f, e_a (x) [e_b,e_c,e_e] (x) e_d (x) e_f,
    e_a (x) e_c (x) [e_b,e_d,e_e] (x) e_f and e_a (x) e_c (x) e_e (x) [e_b,e_d,e_f],
    each weighted by R_ab R_cd R_ef.
    """
    if r.dim != A.dim:
        raise DimensionMismatchError(f"tensor of dimension {r.dim} on algebra of dimension {A.dim}")
    n = A.dim
    rows: dict[int, list[tuple[int, LaurentPoly]]] = defaultdict(list)
    cols: dict[int, list[tuple[int, LaurentPoly]]] = defaultdict(list)
    for a, b, value in r.nonzero():
        rows[a].append((b, value))
        cols[b].append((a, value))
    acc: dict[Index4, LaurentPoly] = {}

    def add(
        slot: int,
        others: tuple[int, int, int],
        weight: LaurentPoly,
        sign: int,
        coeffs: tuple[LaurentPoly, ...],
    ) -> None:
        for t, c in enumerate(coeffs):
            if c.is_zero:
                continue
            index = _insert(slot, t, others)
            term = weight * c if sign > 0 else -(weight * c)
            acc[index] = acc.get(index, LaurentPoly.zero()) + term

    for (x, y, z), sign, coeffs in _signed_products(A):
        # [x,y,z] in the first slot: x=a, y=c, z=e
        for (b, rab), (d, rcd), (f, ref) in itertools.product(rows[x], rows[y], rows[z]):
            add(0, (b, d, f), rab * rcd * ref, sign, coeffs)
        # second slot: x=b, y=c, z=e
        for (a, rab), (d, rcd), (f, ref) in itertools.product(cols[x], rows[y], rows[z]):
            add(1, (a, d, f), rab * rcd * ref, sign, coeffs)
        # third slot: x=b, y=d, z=e
        for (a, rab), (c, rcd), (f, ref) in itertools.product(cols[x], cols[y], rows[z]):
            add(2, (a, c, f), rab * rcd * ref, sign, coeffs)
        # fourth slot: x=b, y=d, z=f
        for (a, rab), (c, rcd), (e, ref) in itertools.product(cols[x], cols[y], cols[z]):
            add(3, (a, c, e), rab * rcd * ref, sign, coeffs)
    nonzero = {index: value for index, value in sorted(acc.items()) if not value.is_zero}
    return FourTensor.from_sparse(n, nonzero)


@dataclass(frozen=True)
class YangBaxterWitness:
    """A tensor together with its Yang-Baxter bracket; a solution iff the residual is zero."""

    algebra: TriAlgebra
    r: TwoTensor
    residual: FourTensor

    @property
    def is_solution(self) -> bool:
        return self.residual.is_zero


def witness(A: TriAlgebra, r: TwoTensor) -> YangBaxterWitness:
    return YangBaxterWitness(A, r, yang_baxter_bracket(A, r))


@dataclass(frozen=True, slots=True)
class TensorDiffEntry:
    row: int
    col: int
    built: LaurentPoly
    transcribed: LaurentPoly


def tensor_diff(built: TwoTensor, transcribed: TwoTensor) -> tuple[TensorDiffEntry, ...]:
    """Coefficients where two tensors differ, in row-major order."""
    if built.dim != transcribed.dim:
        raise DimensionMismatchError(
            f"cannot diff tensors of dimension {built.dim} and {transcribed.dim}"
        )
    n = built.dim
    return tuple(
        TensorDiffEntry(r, c, built[r, c], transcribed[r, c])
        for r in range(n)
        for c in range(n)
        if built[r, c] != transcribed[r, c]
    )


def affected_images(diff: Iterable[TensorDiffEntry], n: int) -> tuple[int, ...]:
    """1-based indices i whose image T(e_i) differs, read off the dual rows."""
    return tuple(sorted({entry.row - n + 1 for entry in diff if entry.row >= n}))


@dataclass(frozen=True)
class CybeOutcome:
    """Result of rebuilding one printed solution from its operator family."""

    name: str
    skew: bool
    residual: FourTensor
    diff: tuple[TensorDiffEntry, ...]
    diff_images: tuple[int, ...]

    @property
    def is_solution(self) -> bool:
        return self.residual.is_zero

    @property
    def passed(self) -> bool:
        return self.skew and self.is_solution and not self.diff

    def summary(self, limit: int = 3) -> str:
        parts = []
        if not self.skew:
            parts.append("not skew-symmetric")
        if not self.is_solution:
            entries = self.residual.nonzero()
            shown = ", ".join(
                f"({','.join(str(i + 1) for i in index)}): {value}"
                for index, value in entries[:limit]
            )
            more = f" ... and {len(entries) - limit} more" if len(entries) > limit else ""
            parts.append(f"[[r,r,r]] {shown}{more}")
        if self.diff:
            rows = ",".join(f"e{i}" for i in self.diff_images)
            parts.append(f"printed tensor differs in the image of {rows}")
        return "; ".join(parts)


def verify_solution(name: str, family: ParamOperator | None = None) -> CybeOutcome:
    """Build r from its family, check skew-symmetry and [[r,r,r]], and diff against print."""
    if family is None:
        family = load_catalogue().get(family_name(name))
    S = semidirect_a3_dual()
    r = tensor_from_operator(S, family)
    residual = yang_baxter_bracket(S, r)
    diff: tuple[TensorDiffEntry, ...] = ()
    if name in CYBE_ROWS:
        diff = tensor_diff(r, tensor_from_operator(S, transcribed_rows(name)))
    images = affected_images(diff, family.dim)
    outcome = CybeOutcome(name, r.is_skew_symmetric, residual, diff, images)
    logger.debug("%s: solution=%s diff=%d", name, outcome.is_solution, len(diff))
    return outcome


def _verify_batch(d: int, names: list[str]) -> list[CybeOutcome]:
    with quadratic_field(d):
        return [verify_solution(name) for name in names]


def verify_cybe_catalogue(names: Iterable[str] | None = None, jobs: int = 1) -> list[CybeOutcome]:
    """Rebuild every printed solution (or the named ones) in natural order."""
    selected = sorted(names if names is not None else CYBE_ROWS, key=natural_key)
    for name in selected:
        if name not in CYBE_ROWS:
            raise KeyError(name)
    d = active_d()
    if jobs <= 1 or len(selected) <= 1:
        return _verify_batch(d, selected)
    batches = [selected[i::jobs] for i in range(min(jobs, len(selected)))]
    outcomes: list[CybeOutcome] = []
    with ProcessPoolExecutor(max_workers=len(batches)) as pool:
        for part in pool.map(_verify_batch, [d] * len(batches), batches):
            outcomes.extend(part)
    return sorted(outcomes, key=lambda o: natural_key(o.name))
