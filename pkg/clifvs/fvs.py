"""
Faddeev-LeVerrier-Souriau algorithm on multivectors.

With N steps, starting from M_0 = 1:

    K_i = A M_{i-1}
    c_i = -(N/i) <K_i>_0
    M_i = K_i + c_i

p_A(v) = v^N + c_1 v^(N-1) + ... + c_N is the characteristic polynomial of
A in a representation of dimension N, M_N = 0, and when c_N != 0 the
inverse is A^-1 = -M_{N-1}/c_N. Only geometric products and scalar parts
are needed; no matrix is ever formed.

The printed trace follows the classic listing: ``t_{i}`` is c_i and
``m_{i}`` is K_i.
"""

from fractions import Fraction
from math import comb
from typing import List, Optional

from clifvs.exceptions import NonTerminationError, SingularMultivectorError
from clifvs.logging_config import get_logger
from clifvs.multivector import (
    Multivector,
    div_scalar,
    inf_norm,
    mul,
    neg,
    scalar_part,
    span,
)
from clifvs.schemas import FvsResult, StepMode
from clifvs.scalars import Scalar, ScalarKind, format_scalar

logger = get_logger(__name__)


def _ceil_half(k: int) -> int:
    return (k + 1) // 2


def step_count(a: Multivector, mode: StepMode = StepMode.REDUCED) -> int:
    """
    Number of FVS steps N for a mode.

    Span-based modes treat an empty span (a pure scalar) as one generator,
    so N is always an even power of two.
    """
    n = a.sig.n
    s = max(len(span(a)), 1)
    if mode is StepMode.FULL:
        return 2 ** n
    if mode is StepMode.BOTT:
        return 2 ** _ceil_half(n)
    if mode is StepMode.SPAN:
        return 2 ** s
    return 2 ** _ceil_half(s)


def _step_coefficient(kind: ScalarKind, n_steps: int, i: int, k_scalar: Scalar) -> Scalar:
    if kind is ScalarKind.RATIONAL:
        return -Fraction(n_steps, i) * k_scalar
    return -(n_steps / i) * k_scalar


def _power_scale(norm_a: float, i: int) -> float:
    try:
        return max(1.0, norm_a) ** i
    except OverflowError:
        return float("inf")


def _negligible(kind: ScalarKind, value: Scalar, norm_a: float, i: int) -> bool:
    """Exact zero test, or |value| <= tol * max(1, |A|_inf^i) for floats."""
    if kind is ScalarKind.RATIONAL:
        return value == 0
    return kind.is_zero(value, _power_scale(norm_a, i))


def _vanishes(k: Multivector, norm_a: float, i: int) -> bool:
    if k.kind is ScalarKind.RATIONAL:
        return k.is_zero()
    return _negligible(k.kind, float(inf_norm(k)), norm_a, i)


def fvs_run(a: Multivector, mode: StepMode = StepMode.REDUCED, want_trace: bool = False) -> FvsResult:
    """
    Run the recursion and collect coefficients, optional trace and inverse.

    A singular input is reported through ``FvsResult.singular``; this
    function does not raise for it.

    Raises:
        NonTerminationError: exact run finished with M_N != 0
    """
    n_steps = step_count(a, mode)
    logger.debug(f"FVS on {a.sig}, mode={mode.value}, N={n_steps}, {len(a)} terms")

    if a.is_scalar():
        return _scalar_run(a, mode, n_steps, want_trace)

    kind = a.kind
    norm_a = float(inf_norm(a))
    coeffs: List[Scalar] = []
    iterates = [] if want_trace else None
    m_prev = Multivector.scalar(a.sig, 1, kind)
    m_before: Optional[Multivector] = None

    for i in range(1, n_steps + 1):
        k = mul(a, m_prev)
        if _vanishes(k, norm_a, i):
            return _early_exit(a, mode, n_steps, i, coeffs, iterates)
        c = _step_coefficient(kind, n_steps, i, scalar_part(k))
        coeffs.append(c)
        if iterates is not None:
            iterates.append((c, k))
        m_before, m_prev = m_prev, k + c

    if kind is ScalarKind.RATIONAL and not m_prev.is_zero():
        raise NonTerminationError(f"M_{n_steps} = {m_prev} is not zero after {n_steps} steps")
    if kind is ScalarKind.FLOAT and not _vanishes(m_prev, norm_a, n_steps):
        logger.warning(f"Float FVS residual |M_N|_inf = {float(inf_norm(m_prev)):.3e}")

    c_last = coeffs[-1]
    singular = _negligible(kind, c_last, norm_a, n_steps)
    inverse = None if singular else div_scalar(neg(m_before), c_last)
    if singular:
        logger.debug("Last coefficient c_N vanishes: no inverse")
    return FvsResult(
        mode=mode,
        n_steps=n_steps,
        steps_run=n_steps,
        coeffs=coeffs,
        singular=singular,
        inverse=inverse,
        iterates=iterates,
    )


def _early_exit(a, mode, n_steps, i, coeffs, iterates) -> FvsResult:
    """
    K_i vanished before step N: A is a zero divisor.

    M_{i-1} is nonzero here: M_j = 0 for 1 <= j < N would force
    c_j = (N/j) c_j = 0 and hence K_j = 0 one step earlier. So A M_{i-1} = 0
    annihilates a nonzero multivector, and with K_i = 0 every later K and c
    vanishes.
    """
    kind = a.kind
    logger.debug(f"K_{i} vanished: remaining coefficients are zero")
    padded = list(coeffs) + [kind.zero] * (n_steps - len(coeffs))
    return FvsResult(
        mode=mode,
        n_steps=n_steps,
        steps_run=i,
        coeffs=padded,
        singular=True,
        inverse=None,
        iterates=iterates,
    )


def char_poly(a: Multivector, mode: StepMode = StepMode.REDUCED) -> List[Scalar]:
    """[1, c_1, ..., c_N]; a zero constant term is not an error here."""
    return fvs_run(a, mode).char_poly


def rep_determinant(a: Multivector, mode: StepMode = StepMode.REDUCED) -> Scalar:
    """Determinant of the N-dimensional representation, (-1)^N c_N."""
    return fvs_run(a, mode).determinant


def inverse(a: Multivector, mode: StepMode = StepMode.REDUCED) -> Multivector:
    """
    Multivector inverse.

    Raises:
        SingularMultivectorError: A is a zero divisor (c_N = 0)
    """
    result = fvs_run(a, mode)
    if result.singular:
        raise SingularMultivectorError(f"{a} has no inverse in {a.sig}: c_N = 0")
    return result.inverse


def format_char_poly(coeffs: List[Scalar], var: str = "v") -> str:
    """Render ``[1, -4, 48]`` as ``v^2 - 4*v + 48``."""
    degree = len(coeffs) - 1
    parts = []
    for power, c in zip(range(degree, -1, -1), coeffs):
        if c == 0:
            continue
        if power == 0:
            monomial = ""
        elif power == 1:
            monomial = var
        else:
            monomial = f"{var}^{power}"
        magnitude = -c if c < 0 else c
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{format_scalar(magnitude)}*{monomial}"
        else:
            body = format_scalar(magnitude)
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts) if parts else "0"


def format_trace(result: FvsResult) -> List[str]:
    """One ``t_{i}= <c_i> , m_{i}= <K_i>`` line per recorded step."""
    return [
        f"t_{{{i}}}= {format_scalar(c)} , m_{{{i}}}= {k}"
        for i, (c, k) in enumerate(result.iterates or [], start=1)
    ]
