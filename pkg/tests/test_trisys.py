"""Tests for 3-Lie algebras, representations and tensors."""

from __future__ import annotations

import itertools
import random

import pytest

from triop.exceptions import DimensionMismatchError, NotARepresentationError
from triop.scalar import LaurentPoly
from triop.trisys import (
    FourTensor,
    Representation,
    TriAlgebra,
    TwoTensor,
    Vector,
    Violation,
    adjoint_rep,
    bracket,
    check_fundamental_identity,
    check_representation,
    coadjoint_rep,
    fundamental_identity_residual,
    make_report,
    pairing,
    permutation_sign,
    semidirect,
    zero_rep,
)


def _e(dim: int, index: int) -> Vector:
    return Vector.basis(dim, index)


def _random_vector(rng: random.Random, dim: int) -> Vector:
    return Vector(rng.randint(-3, 3) for _ in range(dim))


# [e1,e2,e3] = e4, [e1,e2,e4] = e3
FOUR_DIM_GOOD = TriAlgebra(4, {(0, 1, 2): (0, 0, 0, 1), (0, 1, 3): (0, 0, 1, 0)})
# [e1,e2,e3] = e1, [e1,e2,e4] = e3
FOUR_DIM_BAD = TriAlgebra(4, {(0, 1, 2): (1, 0, 0, 0), (0, 1, 3): (0, 0, 1, 0)})


class TestPermutationSign:
    """Tests for permutation_sign."""

    @pytest.mark.parametrize(
        ("indices", "sign"),
        [((0, 1, 2), 1), ((1, 0, 2), -1), ((2, 0, 1), 1), ((2, 1, 0), -1), ((0, 0, 1), 0)],
    )
    def test_signs(self, indices: tuple[int, ...], sign: int) -> None:
        """Test signs of small permutations and repeated indices."""
        assert permutation_sign(indices) == sign


class TestTriAlgebra:
    """Tests for TriAlgebra construction and the bracket."""

    def test_a3_bracket(self) -> None:
        """Test [e1,e2,e3] = e1 and skew-symmetry."""
        a3 = TriAlgebra.a3()
        assert bracket(a3, _e(3, 0), _e(3, 1), _e(3, 2)) == _e(3, 0)
        assert bracket(a3, _e(3, 1), _e(3, 0), _e(3, 2)) == -_e(3, 0)
        assert bracket(a3, _e(3, 0), _e(3, 0), _e(3, 2)).is_zero

    def test_a3_bracket_is_determinant(self) -> None:
        """Test [x,y,z] = det(x,y,z) e1 on random integer vectors."""
        a3 = TriAlgebra.a3()
        rng = random.Random(7)
        for _ in range(50):
            x, y, z = (_random_vector(rng, 3) for _ in range(3))
            det = (
                x[0] * (y[1] * z[2] - y[2] * z[1])
                - x[1] * (y[0] * z[2] - y[2] * z[0])
                + x[2] * (y[0] * z[1] - y[1] * z[0])
            )
            assert bracket(a3, x, y, z) == Vector([det, 0, 0])

    def test_structure_signs(self) -> None:
        """Test structure constants for unsorted triples."""
        a3 = TriAlgebra.a3()
        assert a3.structure(2, 0, 1) == a3.structure(0, 1, 2)
        assert a3.coefficient(0, 2, 1, 0) == -1

    def test_rejects_unsorted_key(self) -> None:
        """Test brackets must be stored on increasing triples."""
        with pytest.raises(DimensionMismatchError):
            TriAlgebra(3, {(1, 0, 2): (1, 0, 0)})

    def test_rejects_wrong_length(self) -> None:
        """Test a bracket must have dim coordinates."""
        with pytest.raises(DimensionMismatchError):
            TriAlgebra(3, {(0, 1, 2): (1, 0)})

    def test_zero_products_not_stored(self) -> None:
        """Test zero brackets are dropped."""
        assert TriAlgebra(3, {(0, 1, 2): (0, 0, 0)}) == TriAlgebra.zero(3)

    def test_specialize(self) -> None:
        """Test substituting a parameter in the structure constants."""
        a = LaurentPoly.variable("a")
        algebra = TriAlgebra(3, {(0, 1, 2): (a, 0, 0)})
        assert algebra.parameters() == frozenset({"a"})
        assert algebra.specialize({"a": 1}) == TriAlgebra.a3()

    def test_bracket_dimension_mismatch(self) -> None:
        """Test vectors of the wrong dimension are rejected."""
        with pytest.raises(DimensionMismatchError):
            bracket(TriAlgebra.a3(), _e(2, 0), _e(3, 1), _e(3, 2))


class TestFundamentalIdentity:
    """Tests for check_fundamental_identity."""

    def test_a3(self) -> None:
        """Test the 3-dimensional algebra passes, reduced and exhaustive."""
        a3 = TriAlgebra.a3()
        assert check_fundamental_identity(a3).passed
        assert check_fundamental_identity(a3, exhaustive=True).passed

    @pytest.mark.parametrize("dim", [1, 2, 4])
    def test_zero_bracket(self, dim: int) -> None:
        """Test the zero bracket passes in any dimension."""
        assert check_fundamental_identity(TriAlgebra.zero(dim)).passed

    def test_four_dim_good(self) -> None:
        """Test a 4-dimensional algebra satisfying the identity."""
        assert check_fundamental_identity(FOUR_DIM_GOOD, exhaustive=True).passed

    def test_four_dim_bad(self) -> None:
        """Test a failing 4-dimensional algebra reports the tuple and residual."""
        report = check_fundamental_identity(FOUR_DIM_BAD)
        assert not report.passed
        found = {v.indices: v for v in report.violations}
        violation = found[(1, 3, 0, 1, 2)]
        assert violation.residual == (0, 0, 1, 0)
        assert violation.describe(FOUR_DIM_BAD.basis_names) == "(2,4,1,2,3): e3: 1"

    def test_reduced_agrees_with_exhaustive(self) -> None:
        """Test the reduced loop finds a violation exactly when the full loop does."""
        for algebra in (FOUR_DIM_GOOD, FOUR_DIM_BAD, TriAlgebra.a3()):
            reduced = check_fundamental_identity(algebra)
            full = check_fundamental_identity(algebra, exhaustive=True)
            assert reduced.passed == full.passed

    def test_multilinear_on_random_vectors(self) -> None:
        """Test the residual vanishes on random elements of A3."""
        a3 = TriAlgebra.a3()
        rng = random.Random(20240101)
        for _ in range(20):
            vectors = [_random_vector(rng, 3) for _ in range(5)]
            assert fundamental_identity_residual(a3, *vectors).is_zero


class TestReports:
    """Tests for violation reports."""

    def test_make_report_sorts(self) -> None:
        """Test violations are ordered by axiom then indices."""
        report = make_report(
            "x",
            [
                Violation((1, 0), (LaurentPoly.one(),), "b"),
                Violation((2, 0), (LaurentPoly.one(),), "a"),
                Violation((0, 0), (LaurentPoly.one(),), "b"),
            ],
        )
        assert [(v.axiom, v.indices) for v in report.violations] == [
            ("a", (2, 0)),
            ("b", (0, 0)),
            ("b", (1, 0)),
        ]

    def test_summary_limit(self) -> None:
        """Test the summary truncates long reports."""
        violations = [Violation((i,), (LaurentPoly.one(),)) for i in range(5)]
        summary = make_report("x", violations, ("e1",)).summary(limit=2)
        assert summary == "(1): e1: 1 | (2): e1: 1 | ... and 3 more"


class TestRepresentations:
    """Tests for representations and the semidirect product."""

    def test_adjoint_and_coadjoint(self) -> None:
        """Test the adjoint and coadjoint actions of A3 are representations."""
        a3 = TriAlgebra.a3()
        assert check_representation(a3, adjoint_rep(a3)).passed
        assert check_representation(a3, coadjoint_rep(a3)).passed

    def test_zero_rep(self) -> None:
        """Test the zero action of the zero algebra."""
        zero = TriAlgebra.zero(3)
        assert check_representation(zero, zero_rep(zero, 2)).passed

    def test_not_a_representation(self) -> None:
        """Test rho(e1,e2) = identity is rejected on A3."""
        a3 = TriAlgebra.a3()
        identity = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        rho = Representation(3, 3, {(0, 1): identity})
        report = check_representation(a3, rho)
        assert not report.passed
        assert any(
            v.axiom == "bracket" and v.indices == (0, 1, 2, 1) for v in report.violations
        )
        with pytest.raises(NotARepresentationError) as exc_info:
            semidirect(a3, rho)
        assert exc_info.value.report == report

    def test_coadjoint_duality(self) -> None:
        """Test <rho*(x,y) a, v> = -<a, ad(x,y) v> on basis elements."""
        a3 = TriAlgebra.a3()
        ad, coad = adjoint_rep(a3), coadjoint_rep(a3)
        for i, j, a, b in itertools.product(range(3), repeat=4):
            x, y = _e(3, i), _e(3, j)
            left = pairing(coad.act(x, y, _e(3, a)), _e(3, b))
            right = pairing(_e(3, a), ad.act(x, y, _e(3, b)))
            assert left == -right

    def test_semidirect_with_dual(self) -> None:
        """Test the 6-dimensional product A3 + A3* is a 3-Lie algebra."""
        a3 = TriAlgebra.a3()
        product = semidirect(a3, coadjoint_rep(a3))
        assert product.dim == 6
        assert product.basis_names == ("e1", "e2", "e3", "e1*", "e2*", "e3*")
        assert product.structure(0, 1, 2) == (1, 0, 0, 0, 0, 0)
        # [e1, e2, e1*] = -e3*
        assert product.structure(0, 1, 3) == (0, 0, 0, 0, 0, -1)
        # [e1, e3, e1*] = e2*, [e2, e3, e1*] = -e1*
        assert product.structure(0, 2, 3) == (0, 0, 0, 0, 1, 0)
        assert product.structure(1, 2, 3) == (0, 0, 0, -1, 0, 0)
        assert len(product.nonzero_products()) == 4
        assert product.structure(3, 4, 0) == (0,) * 6
        assert check_fundamental_identity(product).passed

    def test_semidirect_of_random_algebras(self) -> None:
        """Test semidirect products of random 3-Lie algebras satisfy the identity."""
        rng = random.Random(20240107)
        algebras = [
            TriAlgebra(3, {(0, 1, 2): [rng.randint(-2, 2) for _ in range(3)]}) for _ in range(15)
        ]
        algebras += [FOUR_DIM_GOOD, TriAlgebra.zero(3)]
        for algebra in algebras:
            # every skew bracket on a 3-dimensional space satisfies the identity
            assert check_fundamental_identity(algebra).passed
            for rep in (adjoint_rep(algebra), coadjoint_rep(algebra)):
                product = semidirect(algebra, rep)
                assert product.dim == 2 * algebra.dim
                assert check_fundamental_identity(product).passed

    def test_semidirect_adjoint(self) -> None:
        """Test custom carrier names under the adjoint action."""
        a3 = TriAlgebra.a3()
        product = semidirect(a3, adjoint_rep(a3), carrier_names=("f1", "f2", "f3"))
        assert product.basis_names[3:] == ("f1", "f2", "f3")
        assert product.structure(0, 1, 5) == (0, 0, 0, 1, 0, 0)


class TestTensors:
    """Tests for TwoTensor and FourTensor."""

    def test_skew_symmetry(self) -> None:
        """Test r = e1 (x) e2 - e2 (x) e1 is skew and its transpose is -r."""
        r = TwoTensor([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
        assert r.is_skew_symmetric
        assert r.transpose() == r.scale(-1)
        assert r.nonzero() == [(0, 1, LaurentPoly.one()), (1, 0, -LaurentPoly.one())]

    def test_not_skew(self) -> None:
        """Test a diagonal entry breaks skew-symmetry."""
        assert not TwoTensor([[0, 0], [0, 1]]).is_skew_symmetric

    def test_rejects_non_square(self) -> None:
        """Test coefficient matrices must be square."""
        with pytest.raises(DimensionMismatchError):
            TwoTensor([[0, 1, 2], [0, 1, 2]])

    def test_four_tensor_sparse(self) -> None:
        """Test sparse construction and lexicographic nonzero order."""
        items = {(2, 0, 0, 1): LaurentPoly.constant(-1), (0, 0, 1, 2): LaurentPoly.one()}
        tensor = FourTensor.from_sparse(3, items)
        assert [index for index, _ in tensor.nonzero()] == [(0, 0, 1, 2), (2, 0, 0, 1)]
        assert tensor[2, 0, 0, 1] == -1
        assert not tensor.is_zero
        assert FourTensor(3).is_zero

    def test_four_tensor_size(self) -> None:
        """Test the dense entry count is checked."""
        with pytest.raises(DimensionMismatchError):
            FourTensor(2, [LaurentPoly.zero()] * 8)
