"""
Basis blades of a non-degenerate Clifford algebra Cl(p,q).

A blade is stored as a bitmap over generator slots: generator e_i (1-based)
occupies bit i-1. Blades are ordered grade first, then lexicographically
on their ascending index sequences:

    1 < e1 < ... < en < e12 < e13 < ... < e1..n

Every table of the matrix representation depends on this order.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from clifvs.constants import MAX_GENERATORS
from clifvs.exceptions import BladeError, SignatureError

_COMPACT = re.compile(r"^e(\d+)$")
_BRACKETED = re.compile(r"^e\[(\d+(?:\s*,\s*\d+)*)\]$")


@dataclass(frozen=True)
class Signature:
    """Metric signature: p generators square to +1, q generators to -1."""
    p: int
    q: int
    r: int = 0

    def __post_init__(self):
        if self.r != 0:
            raise SignatureError(f"degenerate algebras are not supported (r={self.r})")
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"p and q must be non-negative, got ({self.p},{self.q})")
        if self.n < 1:
            raise SignatureError("the algebra needs at least one generator")
        if self.n > MAX_GENERATORS:
            raise SignatureError(f"at most {MAX_GENERATORS} generators are supported, got {self.n}")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Read the ``p,q`` command line form."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 2 or not all(part.isdigit() for part in parts):
            raise SignatureError(f"signature must be written p,q: {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    @property
    def n(self) -> int:
        return self.p + self.q

    def metric_sign(self, index: int) -> int:
        """sigma_i: +1 for the first p generators, -1 for the remaining q."""
        if not 1 <= index <= self.n:
            raise BladeError(f"generator e{index} outside Cl({self.p},{self.q})")
        return 1 if index <= self.p else -1

    def pseudoscalar(self) -> "Blade":
        return Blade((1 << self.n) - 1)

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


@dataclass(frozen=True)
class Blade:
    """Canonical basis element; ``bits`` has bit i-1 set when e_i is a factor."""
    bits: int

    @classmethod
    def from_indices(cls, indices: Iterable[int], sig: Optional[Signature] = None) -> "Blade":
        """
        Build a blade from strictly ascending 1-based generator indices.

        Raises:
            BladeError: indices not strictly ascending, below 1, or above sig.n
        """
        indices = list(indices)
        bits = 0
        previous = 0
        for index in indices:
            if index <= previous:
                raise BladeError(f"blade indices must be strictly ascending and >= 1: {indices}")
            if sig is not None and index > sig.n:
                raise BladeError(f"index {index} exceeds n={sig.n} of {sig}")
            bits |= 1 << (index - 1)
            previous = index
        return cls(bits)

    @classmethod
    def unit(cls) -> "Blade":
        return cls(0)

    @property
    def indices(self) -> Tuple[int, ...]:
        out = []
        bits, index = self.bits, 1
        while bits:
            if bits & 1:
                out.append(index)
            bits >>= 1
            index += 1
        return tuple(out)

    @property
    def grade(self) -> int:
        return self.bits.bit_count()

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.grade, self.indices)

    def is_unit(self) -> bool:
        return self.bits == 0

    def validate(self, sig: Signature) -> None:
        if self.bits >> sig.n:
            raise BladeError(f"blade {self} is not a blade of {sig}")

    def __lt__(self, other: "Blade") -> bool:
        return blade_cmp(self, other) < 0

    def __str__(self) -> str:
        indices = self.indices
        if not indices:
            return "1"
        if indices[-1] <= 9:
            return "e" + "".join(str(i) for i in indices)
        return "e[" + ",".join(str(i) for i in indices) + "]"


def blade_cmp(a: Blade, b: Blade) -> int:
    """Grade-lex comparison: negative, zero or positive like ``cmp``."""
    ka, kb = a.sort_key, b.sort_key
    return (ka > kb) - (ka < kb)


def _reordering_swaps(a: int, b: int) -> int:
    """
    Transpositions needed to sort the concatenation of two ascending index
    lists: the number of pairs (i in a, j in b) with i > j.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps


@lru_cache(maxsize=1 << 16)
def _product(p: int, a: int, b: int) -> Tuple[int, int]:
    # generators above slot p square to -1
    negatives = ((a & b) >> p).bit_count()
    sign = -1 if (_reordering_swaps(a, b) + negatives) & 1 else 1
    return sign, a ^ b


def blade_mul(sig: Signature, a: Blade, b: Blade) -> Tuple[int, Blade]:
    """
    Geometric product of two basis blades.

    Returns:
        (sign, blade) with blade the symmetric difference of the index sets
    """
    sign, bits = _product(sig.p, a.bits, b.bits)
    return sign, Blade(bits)


def blade_square_sign(sig: Signature, a: Blade) -> int:
    """(-1)^(g(g-1)/2) times the metric signs of the factors."""
    sign, _ = _product(sig.p, a.bits, a.bits)
    return sign


def all_blades(generators: Iterable[int]) -> List[Blade]:
    """Power set of the generators, sorted by the grade-lex order."""
    generators = sorted(set(generators))
    blades = []
    for grade in range(len(generators) + 1):
        for combo in combinations(generators, grade):
            blades.append(Blade.from_indices(combo))
    return blades


def parse_blade(text: str, sig: Optional[Signature] = None) -> Blade:
    """
    Read the textual form ``1``, ``e134`` or ``e[3,10,12]``.

    Raises:
        BladeError: malformed text, repeated or descending indices, index > n
    """
    text = text.strip()
    if text == "1":
        return Blade.unit()
    match = _COMPACT.match(text)
    if match:
        return Blade.from_indices([int(d) for d in match.group(1)], sig)
    match = _BRACKETED.match(text)
    if match:
        return Blade.from_indices([int(i) for i in match.group(1).split(",")], sig)
    raise BladeError(f"not a blade: {text!r}")
