from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coideal_schur.scalars import (
    FracBi,
    GaussRational,
    LaurentBi,
    ScalarField,
    ZeroInverse,
    f_B,
    field_invert,
    parse_gaussian,
)

q = LaurentBi.q()
Q = LaurentBi.Q()

small = st.integers(-3, 3)
laurent = st.lists(st.tuples(st.integers(-4, 4), small, small), max_size=4).map(
    lambda ts: sum((LaurentBi.monomial(c, a, b) for c, a, b in ts), LaurentBi.const(0))
)


def test_difference_of_squares():
    assert (q + Q) * (q - Q) == q * q - Q * Q


def test_times_zero():
    assert (q + 3 * Q) * LaurentBi.const(0) == LaurentBi.const(0)


def test_four_term_product():
    lhs = LaurentBi.parse("Q^-2+q^-2") * LaurentBi.parse("Q^-2+q^2")
    assert lhs == LaurentBi.parse("Q^-4 + Q^-2*q^2 + Q^-2*q^-2 + 1")


def test_inverses():
    assert field_invert(F(2, 3)) == F(3, 2)
    assert field_invert(GaussRational(0, 1)) == GaussRational(0, -1)
    assert FracBi(q).inverse() == FracBi(LaurentBi.monomial(1, -1, 0))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field_invert(F(0))
    with pytest.raises(ZeroInverse):
        GaussRational(0, 0).inverse()


def test_fB_values():
    assert f_B(1) == LaurentBi.parse("Q^-2 + 1")
    assert f_B(0) == LaurentBi.const(1)
    assert f_B(2).evaluate(1, 1) == 8
    assert f_B(1).evaluate(1, 3) == F(10, 9)
    assert f_B(1).evaluate(1, GaussRational(0, 1)) == 0


def test_gaussian_parsing():
    assert parse_gaussian("i") == GaussRational(0, 1)
    assert parse_gaussian("1+2*i") == GaussRational(1, 2)


def test_symbolic_field_parameters_are_inverse_pairs():
    S = ScalarField.symbolic()
    assert S.q * (1 / S.q) == S.one
    assert S.Q * (1 / S.Q) == S.one


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(laurent, st.integers(-3, 3).filter(bool), st.integers(-3, 3).filter(bool))
def test_evaluation_is_a_homomorphism(a, q0, Q0):
    b = a * a + q
    assert b.evaluate(F(q0), F(Q0)) == a.evaluate(F(q0), F(Q0)) ** 2 + q0


@given(laurent.filter(lambda p: not p.is_zero()), laurent)
def test_fraction_division_roundtrip(a, b):
    x = FracBi(b) / FracBi(a)
    assert x * FracBi(a) == FracBi(b)


@given(st.fractions(), st.fractions(), st.fractions(), st.fractions())
def test_gaussian_field_inverse(a, b, c, d):
    z = GaussRational(a, b)
    if z:
        assert z * z.inverse() == GaussRational(1)
    w = GaussRational(c, d)
    assert (z * w).conjugate() == z.conjugate() * w.conjugate()
