"""
Verification of FVS results against the matrix representation.

``verify_multivector`` runs the per-input checks behind ``clifvs verify``;
``run_golden_examples`` replays the bundled catalogue of worked examples.
"""

from fractions import Fraction
from typing import List, Optional

import numpy as np

from clifvs.blades import Signature
from clifvs.constants import FLOAT_RESIDUAL_TOLERANCE
from clifvs.exceptions import CliffordError
from clifvs.fvs import fvs_run
from clifvs.logging_config import get_logger
from clifvs.matrep import bareiss_det, mul_table, pi, span_basis, trace
from clifvs.multivector import Multivector, inf_norm, mul, reverse, scalar_part, sub
from clifvs.parser import parse
from clifvs.schemas import FvsResult, StepMode, VerifyReport
from clifvs.scalars import ScalarKind, format_scalar
from clifvs.utils import get_golden_examples, poly_pow

logger = get_logger(__name__)


def _close(kind: ScalarKind, x, y, scale: float = 1.0) -> bool:
    if kind is ScalarKind.RATIONAL:
        return x == y
    return abs(x - y) <= FLOAT_RESIDUAL_TOLERANCE * max(1.0, scale)


def _matrices_close(kind: ScalarKind, x: np.ndarray, y: np.ndarray) -> bool:
    if kind is ScalarKind.RATIONAL:
        return bool(np.all(x == y))
    scale = max(1.0, float(np.max(np.abs(x))), float(np.max(np.abs(y))))
    return bool(np.allclose(x, y, rtol=0.0, atol=FLOAT_RESIDUAL_TOLERANCE * scale))


def _is_one(kind: ScalarKind, product: Multivector, scale: float) -> bool:
    if kind is ScalarKind.RATIONAL:
        return product == 1
    residual = sub(product, Multivector.scalar(product.sig, 1.0, kind))
    return float(inf_norm(residual)) <= FLOAT_RESIDUAL_TOLERANCE * max(1.0, scale)


def _det_scale(kind: ScalarKind, image: np.ndarray) -> float:
    """max(1, |pi(A)|_max)^dim, the size a float determinant is measured against."""
    if kind is ScalarKind.RATIONAL:
        return 1.0
    try:
        return max(1.0, float(np.max(np.abs(image)))) ** image.shape[0]
    except OverflowError:
        return float("inf")


def verify_multivector(a: Multivector, mode: StepMode = StepMode.REDUCED) -> VerifyReport:
    """
    Check one input: A A^-1 = A^-1 A = 1 (or a singular verdict confirmed by
    the oracle determinant), FVS determinant against Bareiss on pi(A), trace
    identity, homomorphism on A ~A, and the power relation between modes.
    """
    report = VerifyReport()
    kind = a.kind
    basis = span_basis(a)
    table = mul_table(basis)
    image = pi(a, basis, table)
    oracle_det = bareiss_det(image)
    oracle_singular = _close(kind, oracle_det, 0 * oracle_det, _det_scale(kind, image))

    try:
        result = fvs_run(a, mode)
    except CliffordError as error:
        report.add("termination", False, str(error))
        return report
    report.add("termination", True, f"N = {result.n_steps}, steps run = {result.steps_run}")

    if result.singular:
        report.add(
            "singular",
            oracle_singular,
            f"{'consistent' if oracle_singular else 'INCONSISTENT'} (oracle det = {format_scalar(oracle_det)})",
        )
    else:
        scale = float(inf_norm(a)) * float(inf_norm(result.inverse))
        right = _is_one(kind, mul(a, result.inverse), scale)
        left = _is_one(kind, mul(result.inverse, a), scale)
        report.add("inverse", right and left, f"A^-1 = {result.inverse}")
        report.add("oracle agrees invertible", not oracle_singular,
                   f"oracle det = {format_scalar(oracle_det)}")

    span_result = fvs_run(a, StepMode.SPAN)
    report.add(
        "determinant",
        _close(kind, span_result.determinant, oracle_det, _det_scale(kind, image)),
        f"FVS {format_scalar(span_result.determinant)}, Bareiss {format_scalar(oracle_det)}",
    )

    expected_trace = basis.dim * scalar_part(a)
    report.add(
        "trace identity",
        _close(kind, trace(image), expected_trace, abs(float(expected_trace))),
        f"tr pi(A) = {format_scalar(trace(image))}, 2^s <A>_0 = {format_scalar(expected_trace)}",
    )

    a_rev = reverse(a)
    lhs = pi(mul(a, a_rev), basis, table)
    rhs = image.dot(pi(a_rev, basis, table))
    report.add("homomorphism", _matrices_close(kind, lhs, rhs), "pi(A ~A) = pi(A) pi(~A)")

    reduced = fvs_run(a, StepMode.REDUCED)
    power = span_result.n_steps // reduced.n_steps
    expected = poly_pow(reduced.char_poly, power)
    agree = all(_close(kind, x, y, abs(float(y))) for x, y in zip(span_result.char_poly, expected))
    report.add("mode power relation", agree, f"p_span = p_reduced^{power}")

    logger.debug(f"Verification of {a}: {'PASS' if report.passed else 'FAIL'}")
    return report


def run_golden_examples(examples: Optional[List[dict]] = None) -> VerifyReport:
    """Replay every catalogue entry and compare with its recorded results."""
    report = VerifyReport()
    for example in examples if examples is not None else get_golden_examples():
        sig = Signature(*example["signature"])
        a = parse(example["expression"], sig)
        mode = StepMode(example.get("mode", "reduced"))
        result = fvs_run(a, mode, want_trace="trace" in example)
        failures = _compare_example(example, sig, result)
        report.add(example["id"], not failures, "; ".join(failures) or example.get("name", ""))
    return report


def _compare_example(example: dict, sig: Signature, result: FvsResult) -> List[str]:
    failures = []
    coeffs = [Fraction(c) for c in example.get("coeffs", [])]
    if coeffs and result.coeffs != coeffs:
        failures.append(f"coefficients {result.coeffs} != {coeffs}")
    prefix = [Fraction(c) for c in example.get("coeffs_prefix", [])]
    if prefix and result.coeffs[:len(prefix)] != prefix:
        failures.append("coefficient prefix differs")
    if "factor" in example:
        factor = [Fraction(c) for c in example["factor"]]
        if result.char_poly != poly_pow(factor, example["factor_power"]):
            failures.append("characteristic polynomial is not the recorded power")
    if "trace" in example:
        expected = [parse(text, sig) for text in example["trace"]]
        if [k for _, k in result.iterates[:len(expected)]] != expected:
            failures.append("K trace differs")
    if "inverse" in example and result.inverse != parse(example["inverse"], sig):
        failures.append(f"inverse {result.inverse} != {example['inverse']}")
    if example.get("singular", False) != result.singular:
        failures.append(f"singular = {result.singular}")
    return failures
