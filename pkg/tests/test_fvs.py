from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from clifvs.blades import Signature
from clifvs.exceptions import SingularMultivectorError
from clifvs.fvs import (
    char_poly,
    format_char_poly,
    format_trace,
    fvs_run,
    inverse,
    rep_determinant,
    step_count,
)
from clifvs.matrep import bareiss_det, char_poly_oracle, extended_basis, pi, span_basis
from clifvs.multivector import Multivector, as_kind, inf_norm, mul, scalar_part
from clifvs.parser import parse
from clifvs.scalars import ScalarKind
from clifvs.schemas import StepMode
from clifvs.utils import poly_eval, poly_mul, poly_pow
from tests.strategies import algebra_with, rationals

CL25 = Signature(2, 5)
CL52 = Signature(5, 2)
CL25_A = "1 - 2*e15 + 5*e134"
CL52_A = "1 - e2 + e1234567"


class TestStepCount:
    def test_modes(self):
        a = parse(CL25_A, CL25)
        assert step_count(a, StepMode.FULL) == 128
        assert step_count(a, StepMode.BOTT) == 16
        assert step_count(a, StepMode.SPAN) == 16
        assert step_count(a, StepMode.REDUCED) == 4

    def test_scalar_counts_as_one_generator(self):
        a = Multivector.scalar(CL25, 0)
        assert step_count(a, StepMode.REDUCED) == 2
        assert step_count(a, StepMode.SPAN) == 2

    def test_pseudoscalar_spans_everything(self):
        assert step_count(parse(CL52_A, CL52), StepMode.REDUCED) == 16


class TestCl25:
    def test_reduced_run(self):
        result = fvs_run(parse(CL25_A, CL25), StepMode.REDUCED, want_trace=True)
        assert result.coeffs == [-4, 48, -88, 484]
        assert [scalar_part(k) for _, k in result.iterates] == [1, -24, 66, -484]
        assert str(result.inverse) == "1/22 + 1/11*e15 - 5/22*e134"
        assert not result.singular

    def test_trace_lines(self):
        result = fvs_run(parse(CL25_A, CL25), want_trace=True)
        lines = format_trace(result)
        assert lines[0] == "t_{1}= -4 , m_{1}= 1 - 2*e15 + 5*e134"
        assert lines[1] == "t_{2}= 48 , m_{2}= -24 + 4*e15 - 10*e134"
        assert len(lines) == 4

    def test_span_run_is_eighth_power(self):
        result = fvs_run(parse(CL25_A, CL25), StepMode.SPAN)
        assert result.coeffs[0] == -16
        assert result.coeffs[14] == -39909726208
        assert result.char_poly == poly_pow([1, -2, 22], 8)
        assert result.inverse == inverse(parse(CL25_A, CL25))

    def test_charpoly_text(self):
        coeffs = char_poly(parse(CL25_A, CL25))
        assert format_char_poly(coeffs) == "v^4 - 4*v^3 + 48*v^2 - 88*v + 484"
        assert coeffs == poly_pow([1, -2, 22], 2)

    def test_determinant(self):
        assert rep_determinant(parse(CL25_A, CL25)) == 484


class TestCl52:
    def test_reduced_run(self):
        a = parse(CL52_A, CL52)
        result = fvs_run(a, StepMode.REDUCED, want_trace=True)
        assert result.n_steps == 16
        assert result.coeffs[:3] == [-16, 120, -560]
        assert result.coeffs[14] == -2000
        assert str(result.iterates[1][1]) == "-15 + 14*e2 + 2*e134567 - 14*e1234567"
        assert result.inverse == parse("1/5 - 1/5*e2 + 2/5*e134567 - 3/5*e1234567", CL52)

    def test_factorization(self):
        expected = poly_mul(poly_pow([1, 0, 1], 4), poly_pow([1, -4, 5], 4))
        assert char_poly(parse(CL52_A, CL52)) == expected
        assert rep_determinant(parse(CL52_A, CL52)) == 625


class TestClosedForms:
    @pytest.mark.parametrize("p, q, constant", [(2, 0, 3), (1, 1, 3), (0, 2, 7)])
    def test_example_point(self, p, q, constant):
        sig = Signature(p, q)
        a = parse("2 + e1 + e2 + e12", sig)
        result = fvs_run(a)
        assert result.coeffs == [-4, constant]
        assert result.inverse == parse("2 - e1 - e2 - e12", sig) / constant

    # inverse = (n1 a1 + n2 a2 e1 + n3 a3 e2 + n4 a4 e12) / (d1 a1^2 + d2 a2^2 + d3 a3^2 + d4 a4^2)
    @pytest.mark.parametrize("p, q, numerator, denominator", [
        (2, 0, (1, -1, -1, -1), (1, -1, -1, 1)),
        (1, 1, (-1, 1, 1, 1), (-1, 1, -1, 1)),
        (0, 2, (1, -1, -1, -1), (1, 1, 1, 1)),
    ])
    @given(a=st.tuples(rationals(), rationals(), rationals(), rationals()))
    def test_general(self, p, q, numerator, denominator, a):
        sig = Signature(p, q)
        a1, a2, a3, a4 = a
        value = Multivector(sig, {"1": a1, "e1": a2, "e2": a3, "e12": a4})
        den = sum(d * x ** 2 for d, x in zip(denominator, a))
        assert char_poly(value) == [1, -2 * a1, numerator[0] * den]
        if den == 0:
            assert fvs_run(value).singular
            return
        n1, n2, n3, n4 = numerator
        expected = Multivector(sig, {"1": n1 * a1, "e1": n2 * a2, "e2": n3 * a3, "e12": n4 * a4}) / den
        assert inverse(value) == expected


class TestEdgeCases:
    def test_zero(self):
        sig = Signature(1, 0)
        result = fvs_run(Multivector.zero(sig))
        assert result.char_poly == [1, 0, 0]
        assert format_char_poly(result.char_poly) == "v^2"
        assert result.singular
        with pytest.raises(SingularMultivectorError):
            inverse(Multivector.zero(sig))

    def test_one(self):
        sig = Signature(1, 0)
        assert inverse(Multivector.scalar(sig, 1)) == 1
        assert rep_determinant(Multivector.scalar(sig, 1)) == 1

    def test_scalar_shortcut(self):
        result = fvs_run(Multivector.scalar(CL25, 3), want_trace=True)
        assert result.coeffs == [-6, 9]
        assert result.inverse == Fraction(1, 3)
        assert [scalar_part(k) for _, k in result.iterates] == [3, -9]

    def test_zero_divisor(self):
        sig = Signature(1, 1)
        result = fvs_run(parse("1 + e1", sig))
        assert result.coeffs == [-2, 0]
        assert result.singular
        assert rep_determinant(parse("1 + e1", sig)) == 0
        with pytest.raises(ZeroDivisionError):
            inverse(parse("1 + e1", sig))

    def test_vanishing_iterate_pads_coefficients(self):
        # (e2 + e12)^2 = 0 in Cl(1,1), so K_2 vanishes
        a = parse("e2 + e12", Signature(1, 1))
        result = fvs_run(a, StepMode.SPAN)
        assert result.n_steps == 4
        assert result.steps_run == 2
        assert result.coeffs == [0, 0, 0, 0]
        assert result.singular
        assert bareiss_det(pi(a, span_basis(a))) == 0

    def test_format_char_poly(self):
        assert format_char_poly([1, -4, 3]) == "v^2 - 4*v + 3"
        assert format_char_poly([1, 0, -1]) == "v^2 - 1"
        assert format_char_poly([1, Fraction(1, 2), 0]) == "v^2 + 1/2*v"
        assert format_char_poly([1, -1, 0, 0], var="x") == "x^3 - x^2"


def _nonsingular(a):
    return not fvs_run(a).singular


class TestOracle:
    @given(args=algebra_with(1, max_n=4), points=st.lists(rationals(), min_size=5, max_size=5))
    def test_char_poly_matches_determinant(self, args, points):
        _, a = args
        result = fvs_run(a, StepMode.SPAN)
        oracle = char_poly_oracle(a, span_basis(a), points)
        assert [poly_eval(result.char_poly, v) for v in points] == oracle

    @given(algebra_with(1, max_n=4))
    def test_determinant_matches_bareiss(self, args):
        _, a = args
        assert rep_determinant(a, StepMode.SPAN) == bareiss_det(pi(a, span_basis(a)))

    @given(algebra_with(1, max_n=3))
    def test_full_mode_matches_full_basis(self, args):
        sig, a = args
        basis = extended_basis(sig, range(1, sig.n + 1))
        assert rep_determinant(a, StepMode.FULL) == bareiss_det(pi(a, basis))


class TestModes:
    @given(algebra_with(1, max_n=6))
    def test_inverse_is_two_sided(self, args):
        _, a = args
        assume(_nonsingular(a))
        a_inv = inverse(a)
        assert mul(a, a_inv) == 1
        assert mul(a_inv, a) == 1

    @given(algebra_with(1, max_n=6))
    def test_mode_independence(self, args):
        _, a = args
        runs = [fvs_run(a, mode) for mode in StepMode]
        assert len({run.singular for run in runs}) == 1
        if not runs[0].singular:
            assert all(run.inverse == runs[0].inverse for run in runs)

    @given(algebra_with(1, max_n=4))
    def test_power_relation(self, args):
        _, a = args
        reduced = fvs_run(a, StepMode.REDUCED)
        span_run = fvs_run(a, StepMode.SPAN)
        power = span_run.n_steps // reduced.n_steps
        assert span_run.char_poly == poly_pow(reduced.char_poly, power)

    @given(algebra_with(1, max_n=3))
    def test_full_is_power_of_bott(self, args):
        _, a = args
        full = fvs_run(a, StepMode.FULL)
        bott = fvs_run(a, StepMode.BOTT)
        assert full.char_poly == poly_pow(bott.char_poly, full.n_steps // bott.n_steps)


class TestFloat:
    @given(algebra_with(1, max_n=3))
    def test_float_matches_rational(self, args):
        _, a = args
        exact = fvs_run(a)
        approx = fvs_run(as_kind(a, ScalarKind.FLOAT))
        scale = max(1.0, float(inf_norm(a))) ** exact.n_steps
        assert len(approx.coeffs) == len(exact.coeffs)
        for x, y in zip(approx.coeffs, exact.coeffs):
            assert x == pytest.approx(float(y), abs=1e-9 * scale)
        assert approx.singular == exact.singular
        if not exact.singular:
            residual = mul(as_kind(a, ScalarKind.FLOAT), approx.inverse) - 1.0
            assert float(inf_norm(residual)) <= 1e-9 * scale
