"""
Exception hierarchy for clifvs.

Every error raised on purpose by the library derives from CliffordError,
and also from the matching builtin so callers may catch either.
"""

from typing import Optional


class CliffordError(Exception):
    """Base class of all library errors."""


class SignatureError(CliffordError, ValueError):
    """Invalid signature, or operands from different signatures."""


class BladeError(CliffordError, ValueError):
    """Blade indices out of range or not strictly ascending."""


class SpanError(CliffordError, ValueError):
    """A multivector uses generators outside of an extended basis."""


class ParseError(CliffordError, ValueError):
    """Malformed multivector expression."""

    def __init__(self, text: str, position: int, expected: str, found: Optional[str] = None):
        self.text = text
        self.position = position
        self.expected = expected
        self.found = found if found is not None else (text[position:position + 1] or "end of input")
        super().__init__(
            f"parse error at position {position}: expected {expected}, found {self.found!r}"
        )

    def render(self) -> str:
        """Error message with the input and a caret under the offending position."""
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


class SingularMultivectorError(CliffordError, ZeroDivisionError):
    """The multivector is a zero divisor: its last FVS coefficient is zero."""


class NonTerminationError(CliffordError, ArithmeticError):
    """Exact FVS run ended with a nonzero M_N (internal fault)."""
