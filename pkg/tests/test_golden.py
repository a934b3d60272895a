import pytest

from clifvs.checks import run_golden_examples
from clifvs.utils import get_golden_examples

EXAMPLES = get_golden_examples()


@pytest.mark.parametrize("example", EXAMPLES, ids=[e["id"] for e in EXAMPLES])
def test_golden_example(example):
    report = run_golden_examples([example])
    assert report.passed, report.checks[0].detail


def test_catalogue_covers_both_worked_rational_examples():
    ids = {e["id"] for e in EXAMPLES}
    assert {"cl25-reduced", "cl25-span", "cl52-reduced"} <= ids


def test_mismatch_is_reported():
    example = dict(EXAMPLES[0], coeffs=["-4", "48", "-88", "485"])
    report = run_golden_examples([example])
    assert not report.passed
    assert "coefficients" in report.checks[0].detail
