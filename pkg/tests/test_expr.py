"""Tests for the expression grammar."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from triop.exceptions import ArithmeticDomainError, ExpressionSyntaxError, NonMonomialDivisorError
from triop.expr import parse_assignments, parse_expr, render, tokenize
from triop.scalar import LaurentPoly, Monomial, Scalar, quadratic_field

NAMES = ("a11", "a21", "a33", "b")


class TestParseExpr:
    """Tests for parse_expr."""

    def test_integer(self) -> None:
        """Test a bare integer."""
        assert parse_expr("42") == 42

    def test_precedence(self) -> None:
        """Test * binds tighter than + and ^ tighter than unary minus."""
        a = LaurentPoly.variable("a")
        assert parse_expr("1 + 2*a") == 1 + 2 * a
        assert parse_expr("-a^2") == -(a * a)

    def test_sqrt_forms(self) -> None:
        """Test s and sqrt(d) both denote the field generator."""
        root = LaurentPoly.constant(Scalar.sqrt_d())
        assert parse_expr("s") == root
        assert parse_expr("sqrt(d)") == root
        assert parse_expr("s*s") == 3

    def test_sqrt_follows_active_field(self) -> None:
        """Test s squares to the session d."""
        with quadratic_field(7):
            assert parse_expr("s^2") == 7

    def test_monomial_division(self) -> None:
        """Test division by a single term gives negative exponents."""
        expected = LaurentPoly.term(1, Monomial({"a23": 1, "a32": 1, "a22": -1}))
        assert parse_expr("a23*a32/a22") == expected

    def test_negative_exponent(self) -> None:
        """Test a^-2 is the inverse square."""
        assert parse_expr("a^-2") * parse_expr("a^2") == 1

    def test_grouped_divisor_collapsing_to_term(self) -> None:
        """Test a parenthesised divisor that normalises to one term is accepted."""
        assert parse_expr("a/(2*a - a)") == 1

    def test_difference_of_equal_terms_is_zero(self) -> None:
        """Test (x*y - x*y)/z normalises to zero."""
        assert parse_expr("(a23*a32 - a23*a32)/a22").is_zero

    def test_non_monomial_divisor(self) -> None:
        """Test dividing by a sum is a syntax-level error with a position."""
        with pytest.raises(NonMonomialDivisorError) as exc_info:
            parse_expr("1/(a + b)")
        assert exc_info.value.position == 2

    def test_division_by_zero(self) -> None:
        """Test dividing by a literal zero."""
        with pytest.raises(ArithmeticDomainError):
            parse_expr("a/0")

    @pytest.mark.parametrize("text", ["", "1 +", "(a", "a b", "2 ** 3", "a $ b", "a^b"])
    def test_syntax_errors(self, text: str) -> None:
        """Test malformed input raises ExpressionSyntaxError."""
        with pytest.raises(ExpressionSyntaxError):
            parse_expr(text)

    def test_error_position(self) -> None:
        """Test the reported position points at the offending character."""
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_expr("a + $")
        assert exc_info.value.position == 4
        assert str(exc_info.value).endswith("at position 4")

    @pytest.mark.parametrize(
        "text",
        ["0", "-a21", "(1 + s)*a33", "a13^-1*a23", "-1/2 + a^2*b", "a33 - 1", "-s*a21^3"],
    )
    def test_render_reparses(self, text: str) -> None:
        """Test rendered text parses back to the same polynomial."""
        p = parse_expr(text)
        assert parse_expr(render(p)) == p

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_render_reparses_random(self, d: int) -> None:
        """Test render then parse is the identity on seeded random polynomials."""
        rng = random.Random(20240101 + d)
        with quadratic_field(d):
            for _ in range(400):
                p = LaurentPoly.zero()
                for _ in range(rng.randint(0, 4)):
                    coeff = Scalar(
                        Fraction(rng.randint(-6, 6), rng.randint(1, 4)), rng.randint(-2, 2)
                    )
                    powers = {name: rng.randint(-3, 3) for name in rng.sample(NAMES, 2)}
                    p = p + LaurentPoly.term(coeff, Monomial(powers))
                assert parse_expr(render(p)) == p


class TestTokenize:
    """Tests for tokenize."""

    def test_kinds(self) -> None:
        """Test token kinds and the end marker."""
        tokens = tokenize("a1 + 20")
        assert [t.kind for t in tokens] == ["ident", "op", "int", "end"]
        assert tokens[2].position == 5


class TestParseAssignments:
    """Tests for --params parsing."""

    def test_pairs(self) -> None:
        """Test comma-separated name=expr pairs."""
        assignment = parse_assignments("a21=2, a33=-1/2")
        assert assignment["a21"] == 2
        assert assignment["a33"] == parse_expr("-1/2")

    def test_empty(self) -> None:
        """Test empty text gives no assignment."""
        assert parse_assignments("") == {}

    @pytest.mark.parametrize("text", ["a21", "s=1", "a=1,a=2", "1a=3"])
    def test_rejects(self, text: str) -> None:
        """Test malformed or duplicate assignments."""
        with pytest.raises(ExpressionSyntaxError):
            parse_assignments(text)
