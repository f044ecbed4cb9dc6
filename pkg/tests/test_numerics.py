from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polylrs.numerics import (
    FLOAT,
    MACHINE_EPS,
    RATIONAL,
    Mode,
    TolerancePolicy,
    format_scalar,
    is_effectively_zero,
    is_feasibly_nonneg,
    parse_scalar,
    to_scalar,
)

small = st.fractions(min_value=-50, max_value=50, max_denominator=40)


def test_default_float_thresholds():
    assert FLOAT.zero_snap == 100 * MACHINE_EPS
    assert FLOAT.feas_slack == 10 * MACHINE_EPS
    assert RATIONAL.zero_snap == 0 and RATIONAL.feas_slack == 0


def test_rational_mode_rejects_tolerances():
    with pytest.raises(ValueError):
        TolerancePolicy(Mode.RATIONAL, zero_snap=1e-12)
    with pytest.raises(ValueError):
        TolerancePolicy.floating(zero_snap=-1.0)


@pytest.mark.parametrize(
    "text, value",
    [("0.31", Fraction(31, 100)), ("-3/6", Fraction(-1, 2)), ("+7", Fraction(7)), ("1.018", Fraction(509, 500))],
)
def test_parse_exact(text, value):
    assert parse_scalar(text) == value
    assert isinstance(parse_scalar(text), Fraction)


@pytest.mark.parametrize("bad", ["", "1/0", ".5", "1.", "1e3", "a", "1/-2", "--1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_parse_float_mode():
    assert parse_scalar("0.1", FLOAT) == 0.1
    assert isinstance(parse_scalar("1/3", FLOAT), float)


def test_floats_enter_rational_mode_by_repr():
    assert to_scalar(0.1) == Fraction(1, 10)
    with pytest.raises(ValueError):
        to_scalar(float("nan"))


def test_format():
    assert format_scalar(Fraction(6, 4)) == "3/2"
    assert format_scalar(Fraction(-4, 2)) == "-2"
    assert format_scalar(0.1) == "0.10000000000000001"


@given(small, small)
def test_exact_field_identities(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
    assert Fraction(a.numerator, a.denominator) == a


@given(small)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(small)
def test_rational_predicates_are_exact(x):
    assert is_effectively_zero(x) == (x == 0)
    assert is_feasibly_nonneg(x) == (x >= 0)


def test_float_predicates_use_thresholds():
    assert is_effectively_zero(50 * MACHINE_EPS, FLOAT)
    assert not is_effectively_zero(1e-12, FLOAT)
    assert is_feasibly_nonneg(-5 * MACHINE_EPS, FLOAT)
    assert not is_feasibly_nonneg(-1e-12, FLOAT)
