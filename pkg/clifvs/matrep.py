"""
Real matrix representation of Cl(p,q) over an extended basis.

The multiplication table M of the ordered blades gives, for every blade
e_s, a signed 0/+-1 coefficient matrix A_s = C_s(M). With the diagonal
metric G of blade squares, E_s = G A_s is the image of e_s, and

    pi(A) = sum_s a_s E_s

is a faithful representation of dimension 2^s. Row i of pi(A) holds the
coefficients of e_i A, so the first row recovers A itself and the trace
is 2^s <A>_0. This module is the independent oracle for the FVS module.

Exact matrices are numpy object arrays of ``Fraction``; float matrices
are float64 arrays.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from clifvs.blades import Blade, Signature, all_blades, blade_mul, blade_square_sign
from clifvs.constants import FLOAT_PIVOT_TOLERANCE, MAX_REP_GENERATORS
from clifvs.exceptions import SpanError
from clifvs.logging_config import get_logger
from clifvs.multivector import Multivector, span
from clifvs.scalars import Scalar, ScalarKind

logger = get_logger(__name__)

RepMatrix = np.ndarray


@dataclass(frozen=True)
class ExtendedBasis:
    """The 2^s blades over a generator subset, sorted by the grade-lex order."""
    sig: Signature
    generators: Tuple[int, ...]
    blades: Tuple[Blade, ...]
    ordinals: Dict[int, int] = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.blades)

    def ordinal(self, blade: Blade) -> int:
        """Position of a blade in the basis (0 is the unit)."""
        try:
            return self.ordinals[blade.bits]
        except KeyError:
            raise SpanError(f"blade {blade} is not in the basis over {list(self.generators)}") from None


@dataclass(frozen=True)
class MulTable:
    """entries[i][j] = (sign, blade) with blades[i] blades[j] = sign * blade."""
    basis: ExtendedBasis
    entries: Tuple[Tuple[Tuple[int, Blade], ...], ...]


@dataclass(frozen=True)
class MetricMatrix:
    """Diagonal of G: sigma_i, the square sign of blades[i]."""
    diagonal: Tuple[int, ...]

    def as_array(self, kind: ScalarKind = ScalarKind.RATIONAL) -> RepMatrix:
        out = zeros(len(self.diagonal), kind)
        for i, sigma in enumerate(self.diagonal):
            out[i, i] = kind.coerce(sigma)
        return out


def zeros(dim: int, kind: ScalarKind = ScalarKind.RATIONAL) -> RepMatrix:
    if kind is ScalarKind.FLOAT:
        return np.zeros((dim, dim), dtype=np.float64)
    return np.array([[Fraction(0)] * dim for _ in range(dim)], dtype=object)


def identity(dim: int, kind: ScalarKind = ScalarKind.RATIONAL) -> RepMatrix:
    out = zeros(dim, kind)
    for i in range(dim):
        out[i, i] = kind.one
    return out


def extended_basis(sig: Signature, generators: Iterable[int],
                   max_generators: int = MAX_REP_GENERATORS) -> ExtendedBasis:
    """
    Ordered power set of a generator subset.

    Raises:
        SpanError: empty generator set, generator outside sig, or more than
            max_generators generators
    """
    generators = tuple(sorted(set(generators)))
    if not generators:
        raise SpanError("an extended basis needs at least one generator")
    if generators[0] < 1 or generators[-1] > sig.n:
        raise SpanError(f"generators {list(generators)} are not all in {sig}")
    if len(generators) > max_generators:
        raise SpanError(
            f"basis over {len(generators)} generators exceeds the dense matrix cap of {max_generators}"
        )
    blades = tuple(all_blades(generators))
    logger.debug(f"Extended basis over {list(generators)} of {sig}: {len(blades)} blades")
    return ExtendedBasis(
        sig=sig,
        generators=generators,
        blades=blades,
        ordinals={blade.bits: i for i, blade in enumerate(blades)},
    )


def span_basis(a: Multivector, max_generators: int = MAX_REP_GENERATORS) -> ExtendedBasis:
    """Basis over span(a); scalars get the single generator e1."""
    return extended_basis(a.sig, span(a) or {1}, max_generators)


def mul_table(basis: ExtendedBasis) -> MulTable:
    sig = basis.sig
    entries = tuple(
        tuple(blade_mul(sig, left, right) for right in basis.blades)
        for left in basis.blades
    )
    return MulTable(basis=basis, entries=entries)


def metric_matrix(basis: ExtendedBasis) -> MetricMatrix:
    return MetricMatrix(tuple(blade_square_sign(basis.sig, blade) for blade in basis.blades))


def coeff_matrix(table: MulTable, s: int, kind: ScalarKind = ScalarKind.RATIONAL) -> RepMatrix:
    """
    A_s = C_s(M): the signed coefficient of blades[s] in every table entry.

    Exactly one nonzero per row and per column.
    """
    target = table.basis.blades[s]
    out = zeros(table.basis.dim, kind)
    for i, row in enumerate(table.entries):
        for j, (sign, blade) in enumerate(row):
            if blade == target:
                out[i, j] = kind.coerce(sign)
    return out


def rep_matrix(basis: ExtendedBasis, table: MulTable, s: int,
               kind: ScalarKind = ScalarKind.RATIONAL) -> RepMatrix:
    """E_s = G A_s, the image of blades[s]."""
    return metric_matrix(basis).as_array(kind).dot(coeff_matrix(table, s, kind))


def pi(a: Multivector, basis: ExtendedBasis, table: MulTable = None) -> RepMatrix:
    """
    Image of a multivector: sum of a_s E_s.

    Row i is filled from the products blades[i] e_s read off the table, which
    is entry-for-entry the same as summing G A_s.

    Raises:
        SpanError: span(a) is not covered by the basis generators
    """
    missing = span(a) - set(basis.generators)
    if missing:
        raise SpanError(f"generators {sorted(missing)} of the multivector are outside the basis")
    table = table or mul_table(basis)
    out = zeros(basis.dim, a.kind)
    for blade, value in a.terms.items():
        s = basis.ordinal(blade)
        for i, row in enumerate(table.entries):
            sign, product = row[s]
            out[i, basis.ordinal(product)] += value if sign > 0 else -value
    return out


def pi_inverse(m: RepMatrix, basis: ExtendedBasis) -> Multivector:
    """Read the multivector back from the first row of its image."""
    kind = ScalarKind.FLOAT if m.dtype == np.float64 else ScalarKind.RATIONAL
    return Multivector(basis.sig, {blade: m[0, j] for j, blade in enumerate(basis.blades)}, kind)


def trace(m: RepMatrix) -> Scalar:
    return sum((m[i, i] for i in range(m.shape[0])), m[0, 0] * 0)


def is_sparse(m: RepMatrix) -> bool:
    """Exactly one nonzero entry in every row and every column."""
    nonzero = m != 0
    return bool(np.all(nonzero.sum(axis=0) == 1) and np.all(nonzero.sum(axis=1) == 1))


def is_latin(table: MulTable) -> bool:
    """Every blade appears exactly once in each row and each column."""
    expected = set(table.basis.blades)
    dim = table.basis.dim
    rows_ok = all({blade for _, blade in row} == expected for row in table.entries)
    cols_ok = all({table.entries[i][j][1] for i in range(dim)} == expected for j in range(dim))
    return rows_ok and cols_ok


def structure_identity_holds(table: MulTable, metric: MetricMatrix) -> bool:
    """
    m_ll' = sigma_mu m_lmu m_mul' for every l, l' and every mu.

    Only stored entries are read: the product of the two factor blades is
    looked up in the table itself, so a corrupted sign or blade shows up as
    a mismatch for some mu outside {0, l, l'}.
    """
    basis = table.basis
    entries = table.entries
    for lam, row in enumerate(entries):
        for lam2, (sign, blade) in enumerate(row):
            for mu in range(basis.dim):
                s1, b1 = entries[lam][mu]
                s2, b2 = entries[mu][lam2]
                s3, b3 = entries[basis.ordinal(b1)][basis.ordinal(b2)]
                if b3 != blade or metric.diagonal[mu] * s1 * s2 * s3 != sign:
                    logger.debug(f"Structure identity fails at ({lam}, {lam2}) through {mu}")
                    return False
    return True


def bareiss_det(m: RepMatrix) -> Scalar:
    """
    Determinant by elimination.

    Exact matrices use single-step fraction-free Bareiss elimination (integral
    inputs stay integral). Float matrices use partial pivoting, treating pivots
    below FLOAT_PIVOT_TOLERANCE * max|row| as zero.
    """
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError(f"matrix is not square (shape = {m.shape})")
    if n == 0:
        return Fraction(1)
    if m.dtype == np.float64:
        return _float_det(m)

    work = [list(row) for row in m]
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k] != 0:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (pivot * work[i][j] - work[i][k] * work[k][j]) / previous
        previous = pivot
    return sign * Fraction(work[n - 1][n - 1])


def _float_det(m: RepMatrix) -> float:
    work = np.array(m, dtype=np.float64)
    n = work.shape[0]
    det = 1.0
    for k in range(n):
        scale = np.max(np.abs(work[k:, k:]), axis=1)
        scale[scale == 0] = 1.0
        pivot_row = k + int(np.argmax(np.abs(work[k:, k]) / scale))
        row_max = np.max(np.abs(work[pivot_row, k:]))
        if row_max == 0 or abs(work[pivot_row, k]) < FLOAT_PIVOT_TOLERANCE * row_max:
            return 0.0
        if pivot_row != k:
            work[[k, pivot_row]] = work[[pivot_row, k]]
            det = -det
        det *= work[k, k]
        work[k + 1:, k:] -= np.outer(work[k + 1:, k] / work[k, k], work[k, k:])
    return float(det)


def char_poly_oracle(a: Multivector, basis: ExtendedBasis, points: Sequence[Scalar]) -> List[Scalar]:
    """det(v I - pi(A)) at each point v."""
    image = pi(a, basis)
    eye = identity(basis.dim, a.kind)
    return [bareiss_det(eye * a.kind.coerce(v) - image) for v in points]
