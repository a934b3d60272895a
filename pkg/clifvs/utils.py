import os
import sys
from typing import List, Sequence

import yaml

from clifvs.scalars import Scalar

MODULE_DIR = os.path.dirname(os.path.abspath(__file__))
GOLDEN_EXAMPLES_FILE = f"{MODULE_DIR}/assets/golden_examples.yml"


def get_golden_examples(path: str = GOLDEN_EXAMPLES_FILE) -> List[dict]:
    """Load the catalogue of worked examples with their expected results."""
    with open(path, "r") as f:
        data = yaml.safe_load(f)
        return data


def read_expression(arg: str) -> str:
    """The positional expression, or standard input when it is ``-``."""
    if arg == "-":
        return sys.stdin.read().strip()
    return arg


def poly_eval(coeffs: Sequence[Scalar], v: Scalar) -> Scalar:
    """Horner evaluation; coefficients highest degree first."""
    total = coeffs[0] * 0
    for c in coeffs:
        total = total * v + c
    return total


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
    """Product of two polynomials, coefficients highest degree first."""
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a: Sequence[Scalar], k: int) -> List[Scalar]:
    """a^k by repeated squaring."""
    result = [a[0] * 0 + 1]
    base = list(a)
    while k:
        if k & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        k >>= 1
    return result
