"""Exact arithmetic in Q(q): field construction, operators, signs, decimals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betaforge.numberfield import (
    AmbiguousInterval,
    MixedFields,
    NoRootInInterval,
    NotMonic,
    ReduciblePolynomial,
    compare,
    define_field,
    golden_field,
    q2_field,
    qf_field,
    sign,
    to_decimal,
)


def test_builtin_constants_print():
    assert to_decimal(q2_field().q, 15) == "1.710644095045033"
    assert to_decimal(qf_field().q, 5) == "1.75488"
    assert to_decimal(golden_field().q, 6) == "1.618034"


def test_defining_relations_exact():
    q = q2_field().q
    assert (q**4 - (2 * q**2 + q + 1)).is_zero()
    f = qf_field().q
    assert (f**4 - (f**3 + f**2 + 1)).is_zero()
    assert (f**3 - (2 * f**2 - f + 1)).is_zero()
    g = golden_field().q
    assert (g**2 - (g + 1)).is_zero()


def test_define_field_rejects_non_monic():
    with pytest.raises(NotMonic):
        define_field((-1, -1, 2), (Fraction(1), Fraction(2)))


def test_define_field_rejects_low_degree():
    with pytest.raises(ValueError):
        define_field((-1, 1), (Fraction(0), Fraction(2)))


def test_define_field_rejects_rootless_interval():
    with pytest.raises(NoRootInInterval):
        define_field((-1, -1, -2, 0, 1), (Fraction(18, 10), Fraction(19, 10)))


def test_define_field_rejects_two_roots():
    # x^2 - 3 has both roots inside (-2, 2)
    with pytest.raises(AmbiguousInterval):
        define_field((-3, 0, 1), (Fraction(-2), Fraction(2)))


def test_define_field_rejects_rational_root():
    with pytest.raises(ReduciblePolynomial):
        define_field((-1, 0, 1), (Fraction(1, 2), Fraction(3, 2)))
    with pytest.raises(ReduciblePolynomial):
        define_field((0, -1, 1), (Fraction(1, 2), Fraction(3, 2)))


def test_define_field_rejects_empty_interval():
    with pytest.raises(ValueError):
        define_field((-1, -1, 1), (Fraction(2), Fraction(1)))


def test_operators():
    F = q2_field()
    q = F.q
    assert q + q == 2 * q
    assert q - q == 0
    assert 1 - q == -(q - 1)
    assert (q**2) ** 2 == 2 * q**2 + q + 1
    assert q**-2 == 1 / q**2
    assert (1 / q) * q == 1
    assert abs(1 - q) == q - 1
    assert float(q) == pytest.approx(1.710644095045033, abs=1e-12)


def test_division_by_zero():
    F = q2_field()
    with pytest.raises(ZeroDivisionError):
        1 / F.zero


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        q2_field().q + qf_field().q


def test_cross_field_equality_is_false():
    assert q2_field().q != qf_field().q
    # identical rationals still compare equal through coercion
    assert q2_field().one == 1
    assert q2_field().from_rational(Fraction(1, 2)) == Fraction(1, 2)


def test_sign_and_compare():
    F = q2_field()
    q = F.q
    assert sign(q - 1) == 1
    assert sign(1 - q) == -1
    assert sign(q - q) == 0
    # q - 1 > 1/q in this field
    assert compare(q - 1, 1 / q) == 1
    assert compare(1 / q, q - 1) == -1
    assert compare(q, q) == 0
    with pytest.raises(TypeError):
        compare(q, "not a number")


def test_element_coefficient_reduction():
    F = q2_field()
    # q^4 and q^5 reduce to degree < 4 with the defining relation
    q = F.q
    assert (q**4).coeffs == (Fraction(1), Fraction(1), Fraction(2), Fraction(0))
    assert len((q**7).coeffs) == 4


def test_element_vector_too_long():
    F = q2_field()
    with pytest.raises(ValueError):
        F.element((1, 2, 3, 4, 5))


def test_to_decimal_rounds_half_even():
    F = q2_field()
    r = F.from_rational
    assert to_decimal(r(Fraction(1, 8)), 2) == "0.12"
    assert to_decimal(r(Fraction(3, 8)), 2) == "0.38"
    assert to_decimal(r(Fraction(1, 4)), 1) == "0.2"
    assert to_decimal(r(Fraction(-1, 8)), 2) == "-0.12"
    assert to_decimal(F.zero, 6) == "0.000000"


def test_str_rendering():
    F = q2_field()
    assert str(F.zero) == "0"
    assert str(F.one) == "1"
    assert str(F.q) == "q"
    assert "q^2" in str(F.q**2)


def test_rational_detection():
    F = q2_field()
    x = F.from_rational(Fraction(7, 3))
    assert x.is_rational() and x.as_rational() == Fraction(7, 3)
    assert not F.q.is_rational()
    with pytest.raises(ValueError):
        F.q.as_rational()


def test_refined_enclosure_narrows():
    q = q2_field().q
    lo, hi = q.refined_enclosure(Fraction(1, 10**12))
    assert hi - lo <= Fraction(1, 10**12)
    # the root lies strictly between these 20-digit rational brackets
    assert lo < Fraction("1.71064409504503293600")
    assert hi > Fraction("1.71064409504503293599")


_small = st.builds(
    Fraction, st.integers(-8, 8), st.integers(1, 8)
)
_vectors = st.tuples(_small, _small, _small, _small)


@st.composite
def _elements(draw):
    return q2_field().element(draw(_vectors))


@settings(max_examples=60, deadline=None)
@given(_elements(), _elements(), _elements())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + b == b + a
    assert a - a == q2_field().zero


@settings(max_examples=60, deadline=None)
@given(_elements(), _elements())
def test_sign_multiplicative(a, b):
    assert (a * b).sign() == a.sign() * b.sign()


@settings(max_examples=40, deadline=None)
@given(_elements())
def test_division_round_trip(a):
    if a.is_zero():
        return
    b = a * q2_field().q
    assert b / a == q2_field().q


@settings(max_examples=40, deadline=None)
@given(_elements(), st.integers(1, 10))
def test_to_decimal_accuracy(x, digits):
    # the printed decimal is within half an ulp of the exact value
    printed = Fraction(to_decimal(x, digits))
    diff = x - x.field.from_rational(printed)
    bound = x.field.from_rational(Fraction(1, 2 * 10**digits))
    assert (diff - bound).sign() <= 0 and (diff + bound).sign() >= 0


@settings(max_examples=40, deadline=None)
@given(_elements(), _elements())
def test_comparison_total_order(a, b):
    assert (a < b) + (a == b) + (a > b) == 1
    if a < b:
        assert b > a and a <= b and not b <= a
