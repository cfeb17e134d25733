"""Tests for O-operator checks, classification and the grid search."""

from __future__ import annotations

import itertools
import random

import pytest

from triop.catalogue import FAMILIES, OPERATOR_ERRATA, load_catalogue
from triop.exceptions import (
    DimensionMismatchError,
    PreconditionError,
    SubstitutionError,
)
from triop.ooperator import (
    FamilyCatalogue,
    ParamOperator,
    check_o_operator_direct,
    check_o_operator_expanded,
    check_o_operator_relative,
    classify_matrix,
    grid_completeness_search,
    natural_key,
    specialized_conditions_3d,
    verify_catalogue,
)
from triop.scalar import Scalar
from triop.trisys import TriAlgebra, adjoint_rep, zero_rep

A3 = TriAlgebra.a3()
CHECKED_FAMILIES = sorted(set(FAMILIES) - OPERATOR_ERRATA, key=natural_key)


def _instances(family: ParamOperator, seed: int, count: int = 10) -> list[dict[str, int]]:
    """Admissible integer assignments of the family parameters."""
    rng = random.Random(seed)
    names = sorted(family.parameters())
    found: list[dict[str, int]] = []
    while len(found) < count:
        values = {name: rng.randint(-3, 3) for name in names}
        if family.admits(values):
            found.append(values)
    return found


def _is_o_operator(m: tuple[int, ...]) -> bool:
    """Integer oracle: det(M) e1 == E2(M) T(e1) for the 3x3 matrix with rows m[0:3], ..."""
    a11, a12, a13, a21, a22, a23, a31, a32, a33 = m
    det = (
        a11 * (a22 * a33 - a23 * a32)
        - a12 * (a21 * a33 - a23 * a31)
        + a13 * (a21 * a32 - a22 * a31)
    )
    e2 = (a11 * a22 - a12 * a21) + (a11 * a33 - a13 * a31) + (a22 * a33 - a23 * a32)
    return e2 * a11 == det and e2 * a12 == 0 and e2 * a13 == 0


class TestParamOperator:
    """Tests for ParamOperator."""

    def test_denominator_needs_side_condition(self) -> None:
        """Test a parameter in a denominator must be asserted nonzero."""
        with pytest.raises(PreconditionError):
            ParamOperator([["1/a", "0"], ["0", "0"]])
        operator = ParamOperator([["1/a", "0"], ["0", "0"]], ["a"])
        assert operator.parameters() == frozenset({"a"})

    def test_specialize_enforces_side_conditions(self) -> None:
        """Test substituting zero into a side condition raises."""
        operator = ParamOperator([["a", "b"], ["0", "1"]], ["a - 1"])
        with pytest.raises(SubstitutionError):
            operator.specialize({"a": 1})
        specialized = operator.specialize({"a": 2})
        assert specialized.side_conditions == ()
        assert specialized.entries[0][0] == 2

    def test_admits(self) -> None:
        """Test admits checks side conditions at a full assignment."""
        operator = ParamOperator([["a", "b"], ["0", "1"]], ["a - 1"])
        assert operator.admits({"a": 2, "b": 0})
        assert not operator.admits({"a": 1, "b": 0})

    def test_shape(self) -> None:
        """Test rectangular operators and the empty matrix."""
        operator = ParamOperator([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert (operator.source_dim, operator.target_dim, operator.is_square) == (4, 3, False)
        with pytest.raises(DimensionMismatchError):
            ParamOperator([])


class TestDirectCheck:
    """Tests for check_o_operator_direct and its expanded form."""

    def test_identity_is_not_an_o_operator(self) -> None:
        """Test the identity on A3 leaves residual 2 e1."""
        report = check_o_operator_direct(A3, ParamOperator.identity(3))
        assert not report.passed
        assert len(report.violations) == 1
        assert report.violations[0].indices == (0, 1, 2)
        assert report.violations[0].residual == (2, 0, 0)

    def test_zero_operator(self) -> None:
        """Test the zero map is an O-operator."""
        assert check_o_operator_direct(A3, ParamOperator.zero(3)).passed

    def test_generic_residual_matches_cubic_conditions(self) -> None:
        """Test the generic residual equals the specialised cubic conditions."""
        generic = ParamOperator.generic(3)
        first, second, third = specialized_conditions_3d(generic)
        (violation,) = check_o_operator_direct(A3, generic).violations
        assert violation.residual == (-first, second, third)

    def test_expanded_agrees_with_direct(self) -> None:
        """Test the structure-constant expansion gives the same residuals."""
        for family in [*load_catalogue(), ParamOperator.identity(3), ParamOperator.generic(3)]:
            direct = check_o_operator_direct(A3, family)
            expanded = check_o_operator_expanded(A3, family)
            assert [(v.indices, v.residual) for v in direct.violations] == [
                (v.indices, v.residual) for v in expanded.violations
            ]

    @pytest.mark.parametrize("dim", [3, 4])
    def test_expanded_agrees_on_random_algebras(self, dim: int) -> None:
        """Test both forms give identical violations on random constants and operators."""
        rng = random.Random(20240106 + dim)
        for _ in range(100):
            algebra = TriAlgebra(
                dim,
                {
                    key: [rng.choice((-1, 0, 0, 1)) for _ in range(dim)]
                    for key in itertools.combinations(range(dim), 3)
                },
            )
            rows = [[rng.choice((-1, 0, 1, 2)) for _ in range(dim)] for _ in range(dim)]
            operator = ParamOperator(rows)
            direct = check_o_operator_direct(algebra, operator)
            expanded = check_o_operator_expanded(algebra, operator)
            assert [(v.indices, v.residual) for v in direct.violations] == [
                (v.indices, v.residual) for v in expanded.violations
            ]

    def test_dimension_mismatch(self) -> None:
        """Test the operator must match the algebra."""
        with pytest.raises(DimensionMismatchError):
            check_o_operator_direct(A3, ParamOperator.identity(2))

    def test_random_integer_matrices(self) -> None:
        """Test the symbolic check, the cubic conditions and the integer oracle agree."""
        rng = random.Random(20240101)
        verdicts = set()
        for _ in range(500):
            values = tuple(rng.choice((-1, 0, 0, 1)) for _ in range(9))
            operator = ParamOperator([values[0:3], values[3:6], values[6:9]])
            passed = check_o_operator_direct(A3, operator).passed
            assert passed == _is_o_operator(values)
            assert passed == all(c.is_zero for c in specialized_conditions_3d(operator))
            verdicts.add(passed)
        assert verdicts == {True, False}


class TestRelativeCheck:
    """Tests for check_o_operator_relative."""

    def test_adjoint_matches_direct(self) -> None:
        """Test the adjoint representation reproduces the direct check."""
        report = check_o_operator_relative(A3, adjoint_rep(A3), ParamOperator.identity(3))
        assert [v.residual for v in report.violations] == [(2, 0, 0)]

    def test_zero_representation(self) -> None:
        """Test T: V -> A3 for the zero action needs [Tu,Tv,Tw] = 0."""
        operator = ParamOperator([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]])
        report = check_o_operator_relative(A3, zero_rep(A3, 4), operator)
        assert [(v.indices, v.residual) for v in report.violations] == [((0, 1, 2), (-1, 0, 0))]

    def test_carrier_mismatch(self) -> None:
        """Test the operator rows must index the carrier basis."""
        with pytest.raises(DimensionMismatchError):
            check_o_operator_relative(A3, zero_rep(A3, 2), ParamOperator.identity(3))


class TestCatalogueVerification:
    """Tests for verify_catalogue on the printed families."""

    def test_printed_families(self) -> None:
        """Test every printed family passes except O19 and O29."""
        results = verify_catalogue(A3, load_catalogue())
        assert len(results) == 31
        failing = sorted(name for name, report in results.items() if not report.passed)
        assert failing == ["O19", "O29"]

    def test_o19_residual(self) -> None:
        """Test O19 leaves -2 a21 (e2 + e3)."""
        report = verify_catalogue(A3, load_catalogue())["O19"]
        (violation,) = report.violations
        a21 = violation.residual[1].parameters()
        assert a21 == frozenset({"a21"})
        assert violation.residual[1] == violation.residual[2]
        assert violation.residual[0].is_zero
        assert violation.residual[1].substitute({"a21": 1}) == -2

    def test_amended_o29(self) -> None:
        """Test the amended form of O29 is an O-operator."""
        results = verify_catalogue(A3, load_catalogue(amended=True))
        assert results["O29a"].passed
        assert list(results) == sorted(results, key=natural_key)

    def test_empty_catalogue(self) -> None:
        """Test an empty catalogue gives an empty result."""
        assert verify_catalogue(A3, FamilyCatalogue([])) == {}

    def test_catalogue_lookup(self) -> None:
        """Test names, membership and unknown names."""
        catalogue = load_catalogue()
        assert catalogue.names[:3] == ["O1", "O2", "O3"]
        assert "O31" in catalogue
        with pytest.raises(KeyError):
            catalogue.get("O32")


class TestClassify:
    """Tests for classify_matrix."""

    def test_zero_matrix(self) -> None:
        """Test the zero map lies in O1."""
        names = [name for name, _ in classify_matrix([[0, 0, 0], [0, 0, 0], [0, 0, 0]])]
        assert "O1" in names

    def test_assignment(self) -> None:
        """Test the recovered parameters reproduce the matrix."""
        matches = dict(classify_matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]]))
        assert matches["O1"]["a21"] == 1
        assert matches["O1"]["a33"] == 0
        operator = load_catalogue().get("O1").specialize(matches["O1"])
        assert operator.entries[1][0] == 1

    def test_several_families(self) -> None:
        """Test a matrix in the overlap of two families."""
        names = {name for name, _ in classify_matrix([[1, 0, 1], [0, 0, 0], [-1, 0, -1]])}
        assert {"O8", "O9"} <= names

    def test_irrational_entries(self) -> None:
        """Test a member of the sqrt(d) family O30."""
        family = load_catalogue().get("O30")
        assert not family.parameters()
        matrix = [[c.constant_value() for c in row] for row in family.entries]
        assert "O30" in [name for name, _ in classify_matrix(matrix)]
        assert isinstance(matrix[0][0], Scalar)

    @pytest.mark.parametrize("name", CHECKED_FAMILIES)
    def test_family_instances_round_trip(self, name: str) -> None:
        """Test admissible instances pass the direct check and classify back to their family."""
        family = load_catalogue().get(name)
        for values in _instances(family, seed=natural_key(name)[1]):
            instance = family.specialize(values)
            assert check_o_operator_direct(A3, instance).passed, values
            matrix = [[c.constant_value() for c in row] for row in instance.entries]
            matches = dict(classify_matrix(matrix))
            assert name in matches, values
            assert matches[name] == values

    def test_rejects_non_operator(self) -> None:
        """Test a matrix failing the cubic conditions is a precondition error."""
        with pytest.raises(PreconditionError):
            classify_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_rejects_shape(self) -> None:
        """Test only 3x3 matrices are classified."""
        with pytest.raises(DimensionMismatchError):
            classify_matrix([[0, 0], [0, 0]])


class TestGridSearch:
    """Tests for grid_completeness_search."""

    def test_bound_zero(self) -> None:
        """Test the single zero matrix."""
        result = grid_completeness_search(0)
        assert result.examined == 1
        assert result.solution_count == 1
        assert result.unmatched == ()

    def test_negative_bound(self) -> None:
        """Test a negative bound is rejected."""
        with pytest.raises(ValueError, match="bound"):
            grid_completeness_search(-1)

    @pytest.mark.slow
    def test_bound_one_against_integer_oracle(self) -> None:
        """Test the survivors of the {-1,0,1} grid match a plain integer enumeration."""
        expected = sorted(
            values for values in itertools.product((-1, 0, 1), repeat=9) if _is_o_operator(values)
        )
        result = grid_completeness_search(1, audit=50, seed=20240101)
        found = sorted(tuple(itertools.chain.from_iterable(m)) for m, _ in result.solutions)
        assert result.examined == 3**9
        assert found == expected
        assert result.audit_disagreements == ()
        assert sum(1 for _, names in result.solutions if names) + len(result.unmatched) == len(
            expected
        )

    @pytest.mark.slow
    def test_bound_one_totals(self) -> None:
        """Test the recorded totals of the {-1,0,1} grid."""
        result = grid_completeness_search(1)
        assert result.solution_count == 3015
        assert len(result.unmatched) == 1297
        # rank one, outside every family
        first = result.unmatched[0]
        assert first == ((-1, -1, -1), (-1, -1, -1), (-1, -1, -1))
        assert check_o_operator_direct(A3, ParamOperator(first)).passed
        assert classify_matrix(first) == []

    @pytest.mark.slow
    def test_jobs_do_not_change_result(self) -> None:
        """Test parallel chunks merge to the same sorted result."""
        assert grid_completeness_search(1, jobs=1) == grid_completeness_search(1, jobs=3)


class TestNaturalKey:
    """Tests for natural_key."""

    def test_ordering(self) -> None:
        """Test numeric ordering with suffixes."""
        names = ["O10", "r2", "O2", "O29a", "O29", "O1"]
        assert sorted(names, key=natural_key) == ["O1", "O2", "O10", "O29", "O29a", "r2"]
