"""Custom exceptions for triop."""

from __future__ import annotations

from typing import Any


class TriopError(Exception):
    """Base exception for all triop errors."""


class FieldConfigurationError(TriopError):
    """Invalid quadratic field parameter, or scalars from different fields mixed."""


class ArithmeticDomainError(TriopError, ZeroDivisionError):
    """Division by zero or by a non-invertible value."""


class ExpressionSyntaxError(TriopError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int | None = None, text: str = "") -> None:
        super().__init__(message)
        self.position = position
        self.text = text

    def __str__(self) -> str:
        if self.position is not None:
            return f"{super().__str__()} at position {self.position}"
        return super().__str__()


class NonMonomialDivisorError(ExpressionSyntaxError):
    """Divisor does not normalize to a single term."""


class SubstitutionError(TriopError):
    """Parameter assignment is incomplete or inadmissible."""

    def __init__(self, message: str, parameter: str | None = None) -> None:
        super().__init__(message)
        self.parameter = parameter


class DimensionMismatchError(TriopError):
    """Operands of incompatible dimension or index convention."""


class PreconditionError(TriopError):
    """A documented precondition of an operation does not hold."""

    def __init__(self, message: str, report: Any = None) -> None:
        super().__init__(message)
        self.report = report


class NotAnOOperatorError(PreconditionError):
    """The operator does not satisfy the O-operator condition."""


class NotARepresentationError(PreconditionError):
    """The action does not satisfy the representation axioms."""


class InputError(TriopError):
    """Unreadable or schema-invalid input document."""

    def __init__(self, message: str, source: str | None = None) -> None:
        super().__init__(message)
        self.source = source

    def __str__(self) -> str:
        if self.source:
            return f"{self.source}: {super().__str__()}"
        return super().__str__()
