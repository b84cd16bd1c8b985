from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from tpbessel.errors import NoConvergence, ParseError, RangeError
from tpbessel.scalars import (
    PrecisionPolicy,
    format_rational,
    parse_rational,
    refine_until_stable,
    refine_with_bits,
    round_to_double,
)

rationals = st.fractions(min_value=-1000, max_value=1000)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 10/4 ") == Fraction(5, 2)


@pytest.mark.parametrize("bad", ["1.5", "a/b", "1/2/3", "", "1e3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(rationals)
def test_parse_format_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_round_to_double_trivial():
    assert round_to_double(Fraction(0)) == 0.0
    assert round_to_double(Fraction(1, 2)) == 0.5


def test_round_to_double_one_third():
    # frozen from string-to-double conversion of 1/3 at 40 decimal digits
    expected = float("0.3333333333333333333333333333333333333333")
    assert round_to_double(Fraction(1, 3)) == expected


def test_round_to_double_overflow():
    with pytest.raises(RangeError):
        round_to_double(Fraction(10) ** 400)


@given(rationals, rationals)
def test_round_to_double_monotone(x, y):
    if x > y:
        x, y = y, x
    assert round_to_double(x) <= round_to_double(y)


@given(rationals, rationals)
def test_rational_arithmetic_exact(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


def test_refine_constant_returns_after_one_doubling():
    calls = []

    def compute(bits):
        calls.append(bits)
        return [mp.mpf(1)]

    values, bits = refine_with_bits(compute, PrecisionPolicy(initial_bits=256))
    assert values == [mp.mpf(1)]
    assert calls == [256, 512]
    assert bits == 512


def test_refine_quadratic_roots_match_closed_form():
    # eigenvalues of [[1,2],[1,3]]: 2 +/- sqrt(3)
    def compute(bits):
        with mp.workprec(bits):
            s = mp.sqrt(3)
            return [2 + s, 2 - s]

    got = refine_until_stable(compute)
    assert got == [3.7320508075688772, 0.2679491924311227]


def test_refine_invariant_under_initial_bits():
    def compute(bits):
        with mp.workprec(bits):
            return [mp.sqrt(2), mp.pi]

    a = refine_until_stable(compute, PrecisionPolicy(initial_bits=128))
    b = refine_until_stable(compute, PrecisionPolicy(initial_bits=256))
    assert a == b


def test_refine_no_convergence_at_bit_cap():
    def compute(bits):
        return [mp.mpf(bits)]

    with pytest.raises(NoConvergence):
        refine_until_stable(compute, PrecisionPolicy(initial_bits=64, max_bits=64))


def test_policy_validation():
    with pytest.raises(ValueError):
        PrecisionPolicy(initial_bits=32)
    with pytest.raises(ValueError):
        PrecisionPolicy(initial_bits=256, max_bits=128)
    with pytest.raises(ValueError):
        PrecisionPolicy(agreement_rtol=2.0)
