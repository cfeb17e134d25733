"""triop - exact verification of O-operators on 3-Lie algebras."""

from triop.exceptions import (
    ArithmeticDomainError,
    DimensionMismatchError,
    ExpressionSyntaxError,
    FieldConfigurationError,
    InputError,
    NonMonomialDivisorError,
    NotAnOOperatorError,
    NotARepresentationError,
    PreconditionError,
    SubstitutionError,
    TriopError,
)
from triop.ooperator import ParamOperator
from triop.prelie import PreLieAlgebra
from triop.scalar import LaurentPoly, Monomial, Scalar, quadratic_field
from triop.trisys import FourTensor, Representation, TriAlgebra, TwoTensor, Vector

__version__ = "0.1.0"
__all__ = [
    "ArithmeticDomainError",
    "DimensionMismatchError",
    "ExpressionSyntaxError",
    "FieldConfigurationError",
    "FourTensor",
    "InputError",
    "LaurentPoly",
    "Monomial",
    "NonMonomialDivisorError",
    "NotARepresentationError",
    "NotAnOOperatorError",
    "ParamOperator",
    "PreLieAlgebra",
    "PreconditionError",
    "Representation",
    "Scalar",
    "SubstitutionError",
    "TriAlgebra",
    "TriopError",
    "TwoTensor",
    "Vector",
    "__version__",
    "quadratic_field",
]
