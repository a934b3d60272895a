"""
Textual multivector expressions.

Grammar (whitespace is insignificant):

    expression := ['-'] term (('+' | '-') term)*
    term       := scalar ['*' blade] | blade
    scalar     := integer | integer '/' positive-integer | decimal
    blade      := 'e' digit+ | 'e[' index (',' index)* ']'

Decimals are accepted only for float scalars. Blade indices must be
strictly ascending: ``e21`` is an error, never ``-e12``.
"""

import re
from typing import Dict, List, NamedTuple, Optional

from clifvs.blades import Blade, Signature
from clifvs.exceptions import BladeError, ParseError
from clifvs.multivector import Multivector
from clifvs.scalars import Scalar, ScalarKind, format_scalar, scalar_from_literal

_TOKEN_SPEC = [
    ("DECIMAL", r"\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+"),
    ("INTEGER", r"\d+"),
    ("BLADE", r"e\[[^\]]*\]?|e\d*"),
    ("OP", r"[+\-*/]"),
    ("SPACE", r"\s+"),
    ("ERROR", r"."),
]
_TOKENS = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    for match in _TOKENS.finditer(text):
        kind = match.lastgroup
        if kind == "SPACE":
            continue
        if kind == "ERROR":
            raise ParseError(text, match.start(), "a number, a blade or an operator")
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("END", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the flat sum-of-terms grammar."""

    def __init__(self, text: str, sig: Signature, kind: ScalarKind):
        self.text = text
        self.sig = sig
        self.kind = kind
        self.tokens = tokenize(text)
        self.index = 0
        self.terms: Dict[Blade, Scalar] = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def fail(self, expected: str, token: Optional[Token] = None):
        token = token or self.current
        raise ParseError(self.text, token.position, expected, token.text or "end of input")

    def expression(self) -> Multivector:
        sign = 1
        if self.current.kind == "OP" and self.current.text == "-":
            self.advance()
            sign = -1
        self.term(sign)
        while self.current.kind == "OP" and self.current.text in "+-":
            sign = 1 if self.advance().text == "+" else -1
            self.term(sign)
        if self.current.kind != "END":
            self.fail("'+', '-' or end of input")
        return Multivector(self.sig, self.terms, self.kind)

    def term(self, sign: int) -> None:
        token = self.current
        if token.kind == "BLADE":
            self.accumulate(self.blade(), self.kind.one * sign)
            return
        if token.kind not in ("INTEGER", "DECIMAL"):
            self.fail("a number or a blade")
        value = self.scalar()
        blade = Blade.unit()
        if self.current.kind == "OP" and self.current.text == "*":
            self.advance()
            if self.current.kind != "BLADE":
                self.fail("a blade after '*'")
            blade = self.blade()
        self.accumulate(blade, value * sign)

    def scalar(self) -> Scalar:
        token = self.advance()
        literal = token.text
        if token.kind == "INTEGER" and self.current.kind == "OP" and self.current.text == "/":
            self.advance()
            denominator = self.current
            if denominator.kind != "INTEGER" or int(denominator.text) == 0:
                self.fail("a positive integer denominator")
            self.advance()
            literal = f"{literal}/{denominator.text}"
        try:
            return scalar_from_literal(literal, self.kind)
        except ValueError:
            raise ParseError(self.text, token.position, "an integer or rational literal (rational mode)",
                             token.text) from None

    def blade(self) -> Blade:
        token = self.advance()
        body = token.text
        if body == "e":
            self.fail("generator digits after 'e'", token)
        if body.startswith("e["):
            if not body.endswith("]"):
                self.fail("']' closing the blade index list", token)
            parts = [part.strip() for part in body[2:-1].split(",")]
            if not all(part.isdigit() for part in parts):
                self.fail("comma separated generator indices", token)
            indices = [int(part) for part in parts]
        else:
            indices = [int(digit) for digit in body[1:]]
        try:
            return Blade.from_indices(indices, self.sig)
        except BladeError as error:
            raise ParseError(self.text, token.position, f"a valid blade of {self.sig} ({error})",
                             token.text) from None

    def accumulate(self, blade: Blade, value: Scalar) -> None:
        self.terms[blade] = self.terms.get(blade, self.kind.zero) + value


def parse(text: str, sig: Signature, kind: ScalarKind = ScalarKind.RATIONAL) -> Multivector:
    """
    Parse a multivector expression.

    Raises:
        ParseError: with the offending position, what was expected and found
    """
    return _Parser(text, sig, kind).expression()


def format_multivector(a: Multivector) -> str:
    """Canonical form: terms in grade-lex order, ``1 - 2*e15 + 5*e134``."""
    parts = []
    for blade, value in a.terms.items():
        negative = value < 0
        magnitude = -value if negative else value
        if blade.is_unit():
            body = format_scalar(magnitude)
        elif magnitude == 1:
            body = str(blade)
        else:
            body = f"{format_scalar(magnitude)}*{blade}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"
