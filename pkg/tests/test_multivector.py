from fractions import Fraction

import pytest
from hypothesis import given

from clifvs.blades import Blade, Signature
from clifvs.exceptions import SignatureError
from clifvs.multivector import (
    Multivector,
    add,
    as_kind,
    clifford_conjugate,
    div_scalar,
    grade_negation,
    grade_part,
    max_grade,
    mul,
    reverse,
    scalar_part,
    scalar_product,
    span,
)
from clifvs.parser import parse
from clifvs.scalars import ScalarKind
from tests.strategies import algebra_with

CL25 = Signature(2, 5)
CL52 = Signature(5, 2)


class TestConstruction:
    def test_zero_coefficients_dropped(self):
        a = Multivector(CL25, {"e1": 0, "e15": 2})
        assert len(a) == 1
        assert Multivector(CL25, {"e1": 0}).is_zero()

    def test_duplicate_keys_combine(self):
        a = Multivector(CL25, {"e15": 2, Blade.from_indices([1, 5]): -2, (1, 3, 4): 1})
        assert a == Multivector.blade(CL25, "e134")

    def test_float_rejected_in_rational(self):
        with pytest.raises(TypeError):
            Multivector(CL25, {"e1": 0.5})

    def test_terms_in_grade_lex_order(self):
        a = parse("5*e134 - 2*e15 + 1", CL25)
        assert [str(blade) for blade in a.terms] == ["1", "e15", "e134"]

    def test_equality_with_numbers(self):
        assert Multivector.scalar(CL25, 3) == 3
        assert Multivector.zero(CL25) == 0
        assert parse("1 + e1", CL25) != 1


class TestArithmetic:
    def test_reverse_product_cl25(self):
        a = parse("1 - 2*e15 + 5*e134", CL25)
        assert a * reverse(a) == 22

    def test_grade_involution_product_cl52(self):
        a = parse("1 - e2 + e1234567", CL52)
        b = mul(a, grade_negation(a))
        # the unit and the grade 6 blade e134567 survive, the pseudoscalar cancels
        assert b == parse("1 - 2*e134567", CL52)
        assert b * reverse(b) == 5

    def test_reversion_based_inverse_cl52(self):
        a = parse("1 - e2 + e1234567", CL52)
        b = a * grade_negation(a)
        candidate = div_scalar(grade_negation(a) * reverse(b), 5)
        assert candidate == parse("1/5 - 1/5*e2 + 2/5*e134567 - 3/5*e1234567", CL52)
        assert a * candidate == 1

    def test_scale_and_divide(self):
        a = parse("2 + 4*e12", Signature(2, 0))
        assert 3 * a == parse("6 + 12*e12", Signature(2, 0))
        assert a / 2 == parse("1 + 2*e12", Signature(2, 0))
        assert (a / 3).coefficient("e12") == Fraction(4, 3)

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            div_scalar(Multivector.scalar(CL25, 1), 0)

    def test_signature_mismatch(self):
        with pytest.raises(SignatureError):
            add(Multivector.scalar(CL25, 1), Multivector.scalar(CL52, 1))
        with pytest.raises(SignatureError):
            mul(Multivector.scalar(CL25, 1), Multivector.scalar(CL52, 1))

    def test_mixed_kinds_give_float(self):
        a = Multivector.scalar(CL25, 1)
        b = as_kind(parse("1 + e1", CL25), ScalarKind.FLOAT)
        assert (a + b).kind is ScalarKind.FLOAT
        assert (a + 0.5).kind is ScalarKind.FLOAT

    def test_grade_signs(self):
        sig = Signature(4, 0)
        a = parse("1 + e1 + e12 + e123 + e1234", sig)
        assert reverse(a) == parse("1 + e1 - e12 - e123 + e1234", sig)
        assert grade_negation(a) == parse("1 - e1 + e12 - e123 + e1234", sig)
        assert clifford_conjugate(a) == parse("1 - e1 - e12 + e123 + e1234", sig)

    def test_span_and_max_grade(self):
        a = parse("1 - 2*e15 + 5*e134", CL25)
        assert span(a) == {1, 3, 4, 5}
        assert max_grade(a) == 3
        assert max_grade(Multivector.zero(CL25)) is None
        assert span(Multivector.scalar(CL25, 4)) == set()

    def test_scalar_product(self):
        a = parse("1 - 2*e15 + 5*e134", CL25)
        # 1 + 4 * e15^2 + 25 * e134^2 = 1 + 4 - 25
        assert scalar_product(a, a) == -20
        assert scalar_product(a, a) == scalar_part(a * a)

    def test_hash_consistent_with_equality(self):
        a = parse("1 + e1", CL25)
        b = Multivector(CL25, {"1": 1, "e1": 1})
        assert hash(a) == hash(b)
        assert len({a, b}) == 1


class TestAlgebraLaws:
    @given(algebra_with(3))
    def test_associative(self, args):
        _, a, b, c = args
        assert (a * b) * c == a * (b * c)

    @given(algebra_with(3))
    def test_distributive(self, args):
        _, a, b, c = args
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    @given(algebra_with(2))
    def test_reverse_is_anti_automorphism(self, args):
        _, a, b = args
        assert reverse(a * b) == reverse(b) * reverse(a)
        assert reverse(reverse(a)) == a

    @given(algebra_with(2))
    def test_grade_negation_is_automorphism(self, args):
        _, a, b = args
        assert grade_negation(a * b) == grade_negation(a) * grade_negation(b)

    @given(algebra_with(2))
    def test_scalar_product_symmetric(self, args):
        _, a, b = args
        assert scalar_product(a, b) == scalar_product(b, a)
        assert scalar_product(a, b) == scalar_part(a * b)

    @given(algebra_with(1, max_terms=8))
    def test_grade_decomposition(self, args):
        sig, a = args
        total = Multivector.zero(sig)
        for k in range(sig.n + 1):
            total = total + grade_part(a, k)
        assert total == a

    @given(algebra_with(2))
    def test_no_stored_zeros(self, args):
        _, a, b = args
        for value in (a + b, a - a, a * b, -a):
            assert all(c != 0 for c in value.terms.values())
