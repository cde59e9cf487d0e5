"""Exact arithmetic in Q(sqrt d)."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iharalab.qext import SqrtExt, half_power

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


def _elem(d):
    return st.builds(lambda a, b: SqrtExt.of(d, a, b), rationals, rationals)


@given(_elem(13), _elem(13), _elem(13))
@settings(max_examples=50, deadline=None)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x


@given(_elem(5))
@settings(max_examples=50, deadline=None)
def test_division_inverts_multiplication(x):
    if x == SqrtExt.of(5, 0):
        return
    y = SqrtExt.of(5, Fraction(7, 3), Fraction(-2, 9))
    assert (y * x) / x == y


def test_perfect_square_folds():
    x = SqrtExt.of(4, 1, 3)  # 1 + 3*sqrt(4) = 7
    assert x.is_rational()
    assert x.rational_part() == 7


def test_q_equals_one_folds():
    x = SqrtExt.of(1, Fraction(1, 2), Fraction(1, 3))
    assert x.is_rational()
    assert x.rational_part() == Fraction(5, 6)


def test_float_conversion():
    x = SqrtExt.of(2, 1, 1)
    assert abs(float(x) - (1 + math.sqrt(2))) < 1e-15


def test_rational_part_is_component_accessor():
    # rational_part extracts the a in a + b*sqrt(d); callers that need
    # a genuinely rational value must gate on is_rational first.
    x = SqrtExt.of(2, Fraction(3, 4), 1)
    assert not x.is_rational()
    assert x.rational_part() == Fraction(3, 4)


def test_conjugate_rationalization():
    # 1/(1 + sqrt(2)) = sqrt(2) - 1
    one = SqrtExt.of(2, 1)
    x = SqrtExt.of(2, 1, 1)
    assert one / x == SqrtExt.of(2, -1, 1)


@given(st.integers(min_value=-12, max_value=12))
@settings(max_examples=30, deadline=None)
def test_half_power_exact(m):
    d = 13
    v = half_power(d, m)
    want = d ** (m / 2.0)
    assert abs(float(v) - want) < 1e-9 * want
    if m % 2 == 0:
        assert v.is_rational()
        assert v.rational_part() == Fraction(d) ** (m // 2)
    else:
        assert not v.is_rational()


def test_half_power_multiplication():
    d = 7
    for a in range(-5, 6):
        for b in range(-5, 6):
            assert half_power(d, a) * half_power(d, b) == half_power(d, a + b)


def test_mixed_int_fraction_ops():
    x = SqrtExt.of(3, 1, 1)
    assert x + 1 == SqrtExt.of(3, 2, 1)
    assert 2 * x == SqrtExt.of(3, 2, 2)
    assert x - Fraction(1, 2) == SqrtExt.of(3, Fraction(1, 2), 1)
    assert x / 2 == SqrtExt.of(3, Fraction(1, 2), Fraction(1, 2))
