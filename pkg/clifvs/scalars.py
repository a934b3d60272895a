"""
Scalar fields used as multivector coefficients.

Two realizations are supported: exact rationals (``fractions.Fraction``,
the reference semantics) and binary64 floats (best effort, compared with
a tolerance).
"""

import re
from enum import Enum
from fractions import Fraction
from typing import Union

from clifvs.constants import FLOAT_ZERO_TOLERANCE

Scalar = Union[Fraction, float]

_INTEGER = re.compile(r"^[+-]?\d+$")
_RATIONAL = re.compile(r"^[+-]?\d+/\d+$")
_DECIMAL = re.compile(r"^[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?$")


class ScalarKind(Enum):
    """Scalar field of a multivector."""
    RATIONAL = "rational"
    FLOAT = "f64"

    @classmethod
    def from_name(cls, name: str) -> "ScalarKind":
        """Accept the CLI spellings ``rational`` and ``f64`` (``float`` too)."""
        if name == "float":
            return cls.FLOAT
        return cls(name)

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self is ScalarKind.RATIONAL else 0.0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self is ScalarKind.RATIONAL else 1.0

    def coerce(self, value) -> Scalar:
        """
        Convert a value into this field.

        Floats are refused in rational mode; exactness is an explicit choice.
        """
        if self is ScalarKind.RATIONAL:
            if isinstance(value, float):
                raise TypeError(f"float {value!r} cannot enter an exact rational multivector")
            if isinstance(value, str):
                return Fraction(value)
            return Fraction(value)
        return float(value)

    def is_zero(self, value: Scalar, scale: float = 1.0) -> bool:
        """Exact test for rationals, |value| <= tol * scale for floats."""
        if self is ScalarKind.RATIONAL:
            return value == 0
        return abs(value) <= FLOAT_ZERO_TOLERANCE * max(1.0, scale)


def format_scalar(value: Scalar) -> str:
    """Integers plain, rationals as ``p/q``, floats via ``repr``."""
    if isinstance(value, float):
        return repr(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scalar_from_literal(text: str, kind: ScalarKind) -> Scalar:
    """
    Convert a numeric literal of the expression grammar.

    Raises:
        ValueError: decimal literal in rational mode, or malformed literal
    """
    if _INTEGER.match(text) or _RATIONAL.match(text):
        if kind is ScalarKind.RATIONAL:
            return Fraction(text)
        numerator, _, denominator = text.partition("/")
        return float(Fraction(int(numerator), int(denominator or 1)))
    if _DECIMAL.match(text):
        if kind is ScalarKind.RATIONAL:
            raise ValueError(f"decimal literal {text!r} requires float scalars")
        return float(text)
    raise ValueError(f"not a numeric literal: {text!r}")
