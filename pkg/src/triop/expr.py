"""Expression grammar for polynomial entries in JSON documents and on the command line.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-" | "+"] INTEGER)?
    atom   := INTEGER | "s" | "sqrt(d)" | IDENT | "(" expr ")"

``s`` and ``sqrt(d)`` both denote the generator of the active quadratic field, so
``s`` is never a parameter name. A divisor (or a base raised to a negative power)
must normalize to a single term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from triop.exceptions import ArithmeticDomainError, ExpressionSyntaxError, NonMonomialDivisorError
from triop.scalar import LaurentPoly, Scalar

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*/^()]))")
_IDENT_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
SQRT_SYMBOL = "s"


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Split text into tokens, with an end marker."""
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _expect(self, kind: str, text: str | None = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            found = token.text or "end of input"
            raise ExpressionSyntaxError(
                f"expected {wanted!r}, found {found!r}", token.position, self.text
            )
        return self._advance()

    def _is_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def parse(self) -> LaurentPoly:
        if self.current.kind == "end":
            raise ExpressionSyntaxError("empty expression", 0, self.text)
        value = self._expr()
        if self.current.kind != "end":
            raise ExpressionSyntaxError(
                f"unexpected {self.current.text!r}", self.current.position, self.text
            )
        return value

    def _expr(self) -> LaurentPoly:
        value = self._term()
        while self._is_op("+", "-"):
            op = self._advance().text
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> LaurentPoly:
        value = self._unary()
        while self._is_op("*", "/"):
            op = self._advance().text
            position = self.current.position
            rhs = self._unary()
            if op == "*":
                value = value * rhs
            else:
                value = value * self._invert(rhs, position)
        return value

    def _invert(self, divisor: LaurentPoly, position: int) -> LaurentPoly:
        if divisor.is_zero:
            raise ArithmeticDomainError(f"division by zero at position {position}")
        if not divisor.is_term:
            raise NonMonomialDivisorError(
                f"divisor {divisor} is not a single term", position, self.text
            )
        return divisor.inverse()

    def _unary(self) -> LaurentPoly:
        if self._is_op("-"):
            self._advance()
            return -self._unary()
        if self._is_op("+"):
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> LaurentPoly:
        position = self.current.position
        base = self._atom()
        if not self._is_op("^"):
            return base
        self._advance()
        negative = False
        if self._is_op("-", "+"):
            negative = self._advance().text == "-"
        exponent = int(self._expect("int").text)
        if negative:
            return self._invert(base, position) ** exponent
        return base**exponent

    def _atom(self) -> LaurentPoly:
        token = self.current
        if token.kind == "int":
            self._advance()
            return LaurentPoly.constant(int(token.text))
        if token.kind == "ident":
            self._advance()
            if token.text == "sqrt" and self._is_op("("):
                self._advance()
                self._expect("ident", "d")
                self._expect("op", ")")
                return LaurentPoly.constant(Scalar.sqrt_d())
            if token.text == SQRT_SYMBOL:
                return LaurentPoly.constant(Scalar.sqrt_d())
            return LaurentPoly.variable(token.text)
        if self._is_op("("):
            self._advance()
            value = self._expr()
            self._expect("op", ")")
            return value
        found = token.text or "end of input"
        raise ExpressionSyntaxError(f"unexpected {found!r}", token.position, self.text)


def parse_expr(text: str) -> LaurentPoly:
    """Parse an expression into a canonical Laurent polynomial."""
    return _Parser(text).parse()


def render(p: LaurentPoly) -> str:
    """Canonical text for p; parse_expr(render(p)) == p."""
    return str(p)


def parse_assignments(text: str) -> dict[str, LaurentPoly]:
    """Parse ``name=expr,name=expr`` pairs as used by ``--params``."""
    assignment: dict[str, LaurentPoly] = {}
    if not text.strip():
        return assignment
    offset = 0
    for chunk in text.split(","):
        name, sep, value = chunk.partition("=")
        name = name.strip()
        if not sep or not _IDENT_RE.fullmatch(name) or name == SQRT_SYMBOL:
            raise ExpressionSyntaxError(
                f"expected name=expr, found {chunk.strip()!r}", offset, text
            )
        if name in assignment:
            raise ExpressionSyntaxError(f"parameter {name} assigned twice", offset, text)
        assignment[name] = parse_expr(value)
        offset += len(chunk) + 1
    return assignment
