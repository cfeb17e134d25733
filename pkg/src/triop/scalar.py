"""Exact arithmetic: the quadratic field Q(sqrt d) and Laurent polynomials over it.

Every identity triop checks is decided by comparing canonical term maps, so the
classes here keep one invariant above all others: no zero coefficient and no zero
exponent is ever stored.
"""

from __future__ import annotations

import functools
import logging
import operator
from collections.abc import Callable, Iterator, Mapping
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from typing import Literal, cast

from triop.exceptions import (
    ArithmeticDomainError,
    FieldConfigurationError,
    InputError,
    NonMonomialDivisorError,
    SubstitutionError,
)

logger = logging.getLogger(__name__)

DEFAULT_D = 3

_active_d: ContextVar[int] = ContextVar("triop_active_d", default=DEFAULT_D)

Number = int | Fraction


def validate_d(d: int) -> int:
    """Return d if it is a square-free integer >= 2, else raise."""
    if isinstance(d, bool) or not isinstance(d, int):
        raise FieldConfigurationError(f"d must be an integer, got {d!r}")
    if d < 2:
        raise FieldConfigurationError(f"d must be >= 2, got {d}")
    factor = 2
    while factor * factor <= d:
        if d % (factor * factor) == 0:
            raise FieldConfigurationError(f"d must be square-free, {factor * factor} divides {d}")
        factor += 1
    return d


_checked_d = functools.cache(validate_d)


def active_d() -> int:
    """The d of the quadratic field in effect for newly created scalars."""
    return _active_d.get()


@contextmanager
def quadratic_field(d: int) -> Iterator[int]:
    """Run a block with Q(sqrt d) as the coefficient field."""
    token = _active_d.set(validate_d(d))
    logger.debug("Entering Q(sqrt %d)", d)
    try:
        yield d
    finally:
        _active_d.reset(token)


def _fraction_text(value: Fraction) -> str:
    return str(value)


class Scalar:
    """An element rat + irr*sqrt(d) of Q(sqrt d).

    Rational scalars belong to every field, so only two scalars that both carry a
    sqrt(d) part are required to agree on d.
    """

    __slots__ = ("_d", "_irr", "_rat")

    def __init__(self, rat: Number = 0, irr: Number = 0, d: int | None = None) -> None:
        self._rat = Fraction(rat)
        self._irr = Fraction(irr)
        self._d = active_d() if d is None else _checked_d(d)

    @classmethod
    def sqrt_d(cls, d: int | None = None) -> Scalar:
        """The generator sqrt(d)."""
        return cls(0, 1, d)

    @classmethod
    def coerce(cls, value: Scalar | Number) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int | Fraction):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @property
    def rat(self) -> Fraction:
        return self._rat

    @property
    def irr(self) -> Fraction:
        return self._irr

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._irr == 0

    @property
    def norm(self) -> Fraction:
        """Field norm rat^2 - d*irr^2, zero only for the zero scalar."""
        return self._rat * self._rat - self._d * self._irr * self._irr

    def conjugate(self) -> Scalar:
        return Scalar(self._rat, -self._irr, self._d)

    def _field_with(self, other: Scalar) -> int:
        if self._irr and other._irr and self._d != other._d:
            raise FieldConfigurationError(
                f"cannot combine scalars of Q(sqrt {self._d}) and Q(sqrt {other._d})"
            )
        return self._d if self._irr else other._d

    def __bool__(self) -> bool:
        return bool(self._rat) or bool(self._irr)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            return self._irr == 0 and self._rat == other
        if isinstance(other, Scalar):
            if self._rat != other._rat or self._irr != other._irr:
                return False
            return self._irr == 0 or self._d == other._d
        return NotImplemented

    def __hash__(self) -> int:
        if self._irr == 0:
            return hash(self._rat)
        return hash((self._rat, self._irr, self._d))

    def __neg__(self) -> Scalar:
        return Scalar(-self._rat, -self._irr, self._d)

    def __add__(self, other: Scalar | Number) -> Scalar:
        if not isinstance(other, Scalar | int | Fraction):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(self._rat + other._rat, self._irr + other._irr, self._field_with(other))

    def __radd__(self, other: Number) -> Scalar:
        return self + other

    def __sub__(self, other: Scalar | Number) -> Scalar:
        if not isinstance(other, Scalar | int | Fraction):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Number) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Scalar | Number) -> Scalar:
        if isinstance(other, int | Fraction):
            return Scalar(self._rat * other, self._irr * other, self._d)
        if not isinstance(other, Scalar):
            return NotImplemented
        d = self._field_with(other)
        return Scalar(
            self._rat * other._rat + d * self._irr * other._irr,
            self._rat * other._irr + self._irr * other._rat,
            d,
        )

    def __rmul__(self, other: Number) -> Scalar:
        return self * other

    def inverse(self) -> Scalar:
        norm = self.norm
        if norm == 0:
            raise ArithmeticDomainError("division by zero scalar")
        return Scalar(self._rat / norm, -self._irr / norm, self._d)

    def __truediv__(self, other: Scalar | Number) -> Scalar:
        if not isinstance(other, Scalar | int | Fraction):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = Scalar(1, 0, self._d)
        base = self
        while exponent:
            if exponent & 1:
                result *= base
            base *= base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        return f"Scalar({self._rat!s}, {self._irr!s}, d={self._d})"

    def __str__(self) -> str:
        if self._irr == 0:
            return _fraction_text(self._rat)
        if self._irr == 1:
            irr_text = "s"
        elif self._irr == -1:
            irr_text = "-s"
        else:
            irr_text = f"{_fraction_text(self._irr)}*s"
        if self._rat == 0:
            return irr_text
        if irr_text.startswith("-"):
            return f"{_fraction_text(self._rat)} - {irr_text[1:]}"
        return f"{_fraction_text(self._rat)} + {irr_text}"


class Monomial:
    """A product of parameters with nonzero integer exponents, sorted by name."""

    __slots__ = ("_hash", "_powers")

    def __init__(self, powers: Mapping[str, int] | None = None) -> None:
        items = [(name, exp) for name, exp in (powers or {}).items() if exp]
        self._powers: tuple[tuple[str, int], ...] = tuple(sorted(items))
        self._hash = hash(self._powers)

    def __reduce__(self) -> tuple[type[Monomial], tuple[dict[str, int]]]:
        return (Monomial, (dict(self._powers),))

    @classmethod
    def _from_sorted(cls, powers: tuple[tuple[str, int], ...]) -> Monomial:
        mono = cls.__new__(cls)
        mono._powers = powers
        mono._hash = hash(powers)
        return mono

    @classmethod
    def one(cls) -> Monomial:
        return cls._from_sorted(())

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> Monomial:
        return cls({name: exponent})

    @property
    def powers(self) -> tuple[tuple[str, int], ...]:
        return self._powers

    @property
    def is_one(self) -> bool:
        return not self._powers

    @property
    def degree(self) -> int:
        return sum(exp for _, exp in self._powers)

    def exponent(self, name: str) -> int:
        for var, exp in self._powers:
            if var == name:
                return exp
        return 0

    def names(self) -> frozenset[str]:
        return frozenset(name for name, _ in self._powers)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._powers == other._powers

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self._powers < other._powers

    def __mul__(self, other: Monomial) -> Monomial:
        if not other._powers:
            return self
        if not self._powers:
            return other
        merged = dict(self._powers)
        for name, exp in other._powers:
            total = merged.get(name, 0) + exp
            if total:
                merged[name] = total
            else:
                del merged[name]
        return Monomial._from_sorted(tuple(sorted(merged.items())))

    def __pow__(self, exponent: int) -> Monomial:
        if exponent == 0:
            return Monomial.one()
        return Monomial._from_sorted(tuple((name, exp * exponent) for name, exp in self._powers))

    def inverse(self) -> Monomial:
        return self**-1

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __repr__(self) -> str:
        return f"Monomial({dict(self._powers)!r})"

    def __str__(self) -> str:
        if not self._powers:
            return "1"
        return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in self._powers)


Coefficient = Scalar | int | Fraction


class LaurentPoly:
    """A finite sum of Scalar * Monomial terms, canonical by construction."""

    __slots__ = ("_hash", "_terms")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None) -> None:
        clean: dict[Monomial, Scalar] = {}
        for mono, coeff in (terms or {}).items():
            value = Scalar.coerce(coeff)
            if value:
                clean[mono] = clean[mono] + value if mono in clean else value
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash: int | None = None

    def __reduce__(self) -> tuple[type[LaurentPoly], tuple[dict[Monomial, Scalar]]]:
        return (LaurentPoly, (self._terms,))

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Scalar]) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._wrap({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Coefficient) -> LaurentPoly:
        scalar = Scalar.coerce(value)
        return cls._wrap({Monomial.one(): scalar} if scalar else {})

    @classmethod
    def variable(cls, name: str) -> LaurentPoly:
        return cls._wrap({Monomial.variable(name): Scalar(1)})

    @classmethod
    def term(cls, coeff: Coefficient, mono: Monomial) -> LaurentPoly:
        scalar = Scalar.coerce(coeff)
        return cls._wrap({mono: scalar} if scalar else {})

    @classmethod
    def coerce(cls, value: LaurentPoly | Coefficient) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(value)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and Monomial.one() in self._terms)

    @property
    def is_term(self) -> bool:
        """True for exactly one nonzero term, the invertible elements."""
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in canonical rendering order."""
        return sorted(self._terms.items(), key=lambda item: item[0].powers)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, Scalar(0))

    def constant_value(self) -> Scalar:
        if not self.is_constant:
            raise SubstitutionError(f"{self} is not constant")
        return self._terms.get(Monomial.one(), Scalar(0))

    def parameters(self) -> frozenset[str]:
        names: set[str] = set()
        for mono in self._terms:
            names.update(mono.names())
        return frozenset(names)

    def negative_parameters(self) -> frozenset[str]:
        """Parameters that occur with a negative exponent in some term."""
        return frozenset(
            name for mono in self._terms for name, exp in mono.powers if exp < 0
        )

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction | Scalar):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the scalar they compare equal to
            if self.is_constant:
                self._hash = hash(self._terms.get(Monomial.one(), Scalar(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({mono: -coeff for mono, coeff in self._terms.items()})

    def _accumulate(self, other: LaurentPoly, sign: int) -> LaurentPoly:
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = result[mono] + coeff * sign if mono in result else coeff * sign
            if total:
                result[mono] = total
            else:
                result.pop(mono, None)
        return LaurentPoly._wrap(result)

    def __add__(self, other: LaurentPoly | Coefficient) -> LaurentPoly:
        if not isinstance(other, LaurentPoly | Scalar | int | Fraction):
            return NotImplemented
        return self._accumulate(LaurentPoly.coerce(other), 1)

    def __radd__(self, other: Coefficient) -> LaurentPoly:
        return self + other

    def __sub__(self, other: LaurentPoly | Coefficient) -> LaurentPoly:
        if not isinstance(other, LaurentPoly | Scalar | int | Fraction):
            return NotImplemented
        return self._accumulate(LaurentPoly.coerce(other), -1)

    def __rsub__(self, other: Coefficient) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: LaurentPoly | Coefficient) -> LaurentPoly:
        if isinstance(other, Scalar | int | Fraction):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._wrap({mono: coeff * other for mono, coeff in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result: dict[Monomial, Scalar] = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                mono = mono_a * mono_b
                product = coeff_a * coeff_b
                total = result[mono] + product if mono in result else product
                if total:
                    result[mono] = total
                else:
                    result.pop(mono, None)
        return LaurentPoly._wrap(result)

    def __rmul__(self, other: Coefficient) -> LaurentPoly:
        return self * other

    def inverse(self) -> LaurentPoly:
        """Inverse of a single nonzero term."""
        if not self._terms:
            raise ArithmeticDomainError("division by zero polynomial")
        if len(self._terms) != 1:
            raise NonMonomialDivisorError(f"divisor {self} is not a single term")
        ((mono, coeff),) = self._terms.items()
        return LaurentPoly._wrap({mono.inverse(): coeff.inverse()})

    def __truediv__(self, other: LaurentPoly | Coefficient) -> LaurentPoly:
        if not isinstance(other, LaurentPoly | Scalar | int | Fraction):
            return NotImplemented
        return self * LaurentPoly.coerce(other).inverse()

    def __rtruediv__(self, other: Coefficient) -> LaurentPoly:
        return LaurentPoly.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result *= base
            base *= base
            exponent >>= 1
        return result

    def substitute(self, assignment: Mapping[str, Coefficient]) -> Scalar:
        """Evaluate at a full assignment of the parameters."""
        values = {name: Scalar.coerce(value) for name, value in assignment.items()}
        total = Scalar(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for name, exp in mono.powers:
                if name not in values:
                    raise SubstitutionError(f"parameter {name} is not assigned", name)
                value = values[name]
                if exp < 0 and not value:
                    raise SubstitutionError(
                        f"parameter {name} occurs with negative exponent and is assigned 0", name
                    )
                term = term * value**exp
            total = total + term
        return total

    def specialize(self, assignment: Mapping[str, LaurentPoly | Coefficient]) -> LaurentPoly:
        """Substitute some parameters, leaving the rest symbolic."""
        values = {name: LaurentPoly.coerce(value) for name, value in assignment.items()}
        result = LaurentPoly.zero()
        for mono, coeff in self._terms.items():
            kept: dict[str, int] = {}
            term = LaurentPoly.constant(coeff)
            for name, exp in mono.powers:
                if name not in values:
                    kept[name] = exp
                    continue
                value = values[name]
                if exp < 0 and value.is_zero:
                    raise SubstitutionError(
                        f"parameter {name} occurs with negative exponent and is assigned 0", name
                    )
                term = term * value**exp
            result = result + term * LaurentPoly.term(1, Monomial(kept))
        return result

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.terms():
            text = _term_text(coeff, mono)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)


def _term_text(coeff: Scalar, mono: Monomial) -> str:
    if mono.is_one:
        return str(coeff)
    if coeff == 1:
        return str(mono)
    if coeff == -1:
        return f"-{mono}"
    if coeff.is_rational or coeff.rat == 0:
        return f"{coeff}*{mono}"
    return f"({coeff})*{mono}"


def substitute(p: LaurentPoly, assignment: Mapping[str, Coefficient]) -> Scalar:
    """Exact evaluation of p at a full parameter assignment."""
    return p.substitute(assignment)


_BINARY: dict[str, Callable[[object, object], object]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def _type_names(*values: object) -> str:
    return ", ".join(type(value).__name__ for value in values)


def scalar_arith(a: Scalar, b: Scalar, op: Literal["add", "sub", "mul", "div"]) -> Scalar:
    """Apply a named field operation."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise InputError(f"scalar_arith takes two Scalars, got {_type_names(a, b)}")
    if op not in _BINARY:
        raise InputError(f"unknown scalar operation {op!r}")
    return cast("Scalar", _BINARY[op](a, b))


def poly_arith(p: LaurentPoly, q: LaurentPoly, op: Literal["add", "sub", "mul"]) -> LaurentPoly:
    """Apply a named ring operation."""
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unsupported polynomial operation {op!r}, divide with '/'")
    if not isinstance(p, LaurentPoly) or not isinstance(q, LaurentPoly):
        raise InputError(f"poly_arith takes two LaurentPolys, got {_type_names(p, q)}")
    return cast("LaurentPoly", _BINARY[op](p, q))
