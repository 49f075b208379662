"""Laurent coefficient ring: axioms, evaluation, serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpartition.coeff import LaurentPoly, ONE, Q, ZERO, ZeroSpecialization, lp

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12)

polys = st.builds(
    lambda terms: LaurentPoly(terms),
    st.dictionaries(st.integers(-6, 6), rationals, max_size=5))


def test_constants():
    assert ZERO.is_zero()
    assert str(ONE) == '1'
    assert str(Q) == 'q'
    assert Q == lp(1, 1)


def test_basic_arithmetic():
    p = (Q + 1) * (Q - 1)
    assert p == Q * Q - 1
    assert p.coefficient(2) == 1
    assert p.coefficient(0) == -1
    assert p.coefficient(1) == 0


def test_negative_exponents():
    inv = lp(1, -1)
    assert inv * Q == ONE
    assert inv.min_exponent() == -1
    assert (inv + Q).max_exponent() == 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(polys, polys, st.sampled_from([Fraction(1), Fraction(2), Fraction(-3, 7)]))
def test_evaluate_is_ring_homomorphism(a, b, q0):
    assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)
    assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)


def test_evaluate_rejects_zero():
    # q is a unit everywhere downstream, so 0 is refused outright
    with pytest.raises(ZeroSpecialization):
        lp(1, -1).evaluate(Fraction(0))
    with pytest.raises(ZeroSpecialization):
        (Q + 1).evaluate(Fraction(0))


@given(polys)
def test_json_round_trip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(polys, st.integers(0, 4))
def test_power_matches_repeated_multiplication(a, k):
    expect = ONE
    for _ in range(k):
        expect = expect * a
    assert a ** k == expect


def test_json_shape_is_sorted_triples():
    p = lp(Fraction(3, 2), 2) + lp(-1, -1)
    assert p.to_json() == [[-1, '-1', '1'], [2, '3', '2']]
