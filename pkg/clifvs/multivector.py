"""
Sparse multivectors over an exact or floating scalar field.

A multivector maps basis blades to nonzero coefficients. Values are
immutable: every operation returns a new multivector, and no operation
ever stores a zero coefficient.
"""

from fractions import Fraction
from numbers import Number
from typing import Dict, Mapping, Optional, Set, Union

from clifvs.blades import Blade, Signature, _product, parse_blade
from clifvs.exceptions import SignatureError
from clifvs.scalars import Scalar, ScalarKind

BladeLike = Union[Blade, str, int]


class Multivector:
    """
    Element of Cl(p,q): ``A = a_1 + sum_J a_J e_J``.

    Terms are kept keyed by blade bitmap; ``terms`` exposes them keyed by Blade.
    """

    __slots__ = ("sig", "kind", "_terms")

    def __init__(self, sig: Signature, terms: Optional[Mapping[BladeLike, object]] = None,
                 kind: ScalarKind = ScalarKind.RATIONAL):
        self.sig = sig
        self.kind = kind
        raw: Dict[int, Scalar] = {}
        for key, value in (terms or {}).items():
            bits = _blade_bits(key, sig)
            value = kind.coerce(value)
            total = raw.get(bits, kind.zero) + value
            if total == 0:
                raw.pop(bits, None)
            else:
                raw[bits] = total
        self._terms = raw

    @classmethod
    def _from_raw(cls, sig: Signature, kind: ScalarKind, raw: Dict[int, Scalar]) -> "Multivector":
        out = cls.__new__(cls)
        out.sig = sig
        out.kind = kind
        if kind is ScalarKind.FLOAT:
            raw = {bits: float(value) for bits, value in raw.items()}
        out._terms = {bits: value for bits, value in raw.items() if value != 0}
        if __debug__:
            _audit_normalized(out)
        return out

    @classmethod
    def scalar(cls, sig: Signature, value, kind: ScalarKind = ScalarKind.RATIONAL) -> "Multivector":
        return cls(sig, {Blade.unit(): value}, kind)

    @classmethod
    def zero(cls, sig: Signature, kind: ScalarKind = ScalarKind.RATIONAL) -> "Multivector":
        return cls(sig, {}, kind)

    @classmethod
    def blade(cls, sig: Signature, blade: BladeLike, value=1,
              kind: ScalarKind = ScalarKind.RATIONAL) -> "Multivector":
        return cls(sig, {blade: value}, kind)

    @property
    def terms(self) -> Dict[Blade, Scalar]:
        """Coefficients keyed by blade, in grade-lex order."""
        return {Blade(bits): self._terms[bits] for bits in sorted(self._terms, key=lambda b: Blade(b).sort_key)}

    def coefficient(self, blade: BladeLike) -> Scalar:
        return self._terms.get(_blade_bits(blade, self.sig), self.kind.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(bits == 0 for bits in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        return add(self, _lift(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _lift(other, self))

    def __rsub__(self, other):
        return sub(_lift(other, self), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __truediv__(self, other):
        return div_scalar(self, other)

    def __invert__(self):
        return reverse(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Number):
            other = _lift(other, self)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.sig, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {str(self)!r}, kind={self.kind.value})"

    def __str__(self) -> str:
        from clifvs.parser import format_multivector
        return format_multivector(self)


def _blade_bits(key: BladeLike, sig: Signature) -> int:
    if isinstance(key, Blade):
        key.validate(sig)
        return key.bits
    if isinstance(key, str):
        return parse_blade(key, sig).bits
    if isinstance(key, int):
        Blade(key).validate(sig)
        return key
    return Blade.from_indices(key, sig).bits


def _lift(value, like: Multivector) -> Multivector:
    if isinstance(value, Multivector):
        return value
    kind = like.kind if not isinstance(value, float) else ScalarKind.FLOAT
    return Multivector.scalar(like.sig, value, kind)


def _audit_normalized(a: Multivector) -> None:
    assert all(value != 0 for value in a._terms.values()), "stored zero coefficient"


def _result_kind(a: Multivector, b: Multivector) -> ScalarKind:
    return a.kind if a.kind is b.kind else ScalarKind.FLOAT


def _check_same(a: Multivector, b: Multivector) -> None:
    if a.sig != b.sig:
        raise SignatureError(f"operands belong to different algebras: {a.sig} and {b.sig}")


def add(a: Multivector, b: Multivector) -> Multivector:
    _check_same(a, b)
    raw = dict(a._terms)
    for bits, value in b._terms.items():
        raw[bits] = raw.get(bits, 0) + value
    return Multivector._from_raw(a.sig, _result_kind(a, b), raw)


def neg(a: Multivector) -> Multivector:
    return Multivector._from_raw(a.sig, a.kind, {bits: -value for bits, value in a._terms.items()})


def sub(a: Multivector, b: Multivector) -> Multivector:
    return add(a, neg(b))


def scale(a: Multivector, k) -> Multivector:
    k = a.kind.coerce(k) if not isinstance(k, float) else k
    kind = ScalarKind.FLOAT if isinstance(k, float) else a.kind
    return Multivector._from_raw(a.sig, kind, {bits: value * k for bits, value in a._terms.items()})


def div_scalar(a: Multivector, k) -> Multivector:
    """Divide every coefficient by a nonzero scalar (exact in rational mode)."""
    k = a.kind.coerce(k) if not isinstance(k, float) else k
    if k == 0:
        raise ZeroDivisionError("multivector division by zero scalar")
    kind = ScalarKind.FLOAT if isinstance(k, float) else a.kind
    return Multivector._from_raw(a.sig, kind, {bits: value / k for bits, value in a._terms.items()})


def mul(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product: bilinear extension of the blade product."""
    _check_same(a, b)
    p = a.sig.p
    raw: Dict[int, Scalar] = {}
    for x, ca in a._terms.items():
        for y, cb in b._terms.items():
            sign, z = _product(p, x, y)
            term = ca * cb
            raw[z] = raw.get(z, 0) + (term if sign > 0 else -term)
    return Multivector._from_raw(a.sig, _result_kind(a, b), raw)


def grade_part(a: Multivector, k: int) -> Multivector:
    """<A>_k: the terms of grade exactly k."""
    return Multivector._from_raw(
        a.sig, a.kind, {bits: value for bits, value in a._terms.items() if bits.bit_count() == k}
    )


def scalar_part(a: Multivector) -> Scalar:
    """<A>_0, zero when the unit blade is absent."""
    return a._terms.get(0, a.kind.zero)


def scalar_product(a: Multivector, b: Multivector) -> Scalar:
    """
    A * B := <A B>_0, with no implicit reversion.

    Only pairs of equal blades contribute, so the full product is never formed.
    """
    _check_same(a, b)
    p = a.sig.p
    total = _result_kind(a, b).zero
    for bits, ca in a._terms.items():
        cb = b._terms.get(bits)
        if cb is not None:
            sign, _ = _product(p, bits, bits)
            total += ca * cb if sign > 0 else -(ca * cb)
    return total


def _grade_signed(a: Multivector, negate) -> Multivector:
    return Multivector._from_raw(
        a.sig, a.kind,
        {bits: (-value if negate(bits.bit_count()) else value) for bits, value in a._terms.items()},
    )


def reverse(a: Multivector) -> Multivector:
    """Reversion ~: grade k picks up (-1)^(k(k-1)/2)."""
    return _grade_signed(a, lambda k: (k * (k - 1) // 2) & 1)


def grade_negation(a: Multivector) -> Multivector:
    """Grade involution A^t: grade k picks up (-1)^k."""
    return _grade_signed(a, lambda k: k & 1)


def clifford_conjugate(a: Multivector) -> Multivector:
    """Clifford conjugation: grade k picks up (-1)^(k(k+1)/2)."""
    return _grade_signed(a, lambda k: (k * (k + 1) // 2) & 1)


def span(a: Multivector) -> Set[int]:
    """Generator indices occurring in any stored blade."""
    bits = 0
    for key in a._terms:
        bits |= key
    return set(Blade(bits).indices)


def max_grade(a: Multivector) -> Optional[int]:
    """gr[A], the highest grade with a nonzero coefficient (None for 0)."""
    if not a._terms:
        return None
    return max(bits.bit_count() for bits in a._terms)


def inf_norm(a: Multivector) -> Scalar:
    return max((abs(value) for value in a._terms.values()), default=a.kind.zero)


def as_kind(a: Multivector, kind: ScalarKind) -> Multivector:
    """Re-express the coefficients in another scalar field."""
    if kind is a.kind:
        return a
    if kind is ScalarKind.FLOAT:
        return Multivector._from_raw(a.sig, kind, {bits: float(value) for bits, value in a._terms.items()})
    return Multivector._from_raw(a.sig, kind, {bits: Fraction(value) for bits, value in a._terms.items()})
