from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qabacus.turns import DyadicTurn, Turn, format_turn, parse_turn


def test_normalization_wraps_into_unit_interval():
    assert Turn(1.25).value == 0.25
    assert Turn(-0.25).value == 0.75
    assert Turn(3.0).value == 0.0
    # tiny negatives must not round up to 1.0
    assert Turn(-1e-18).value == 0.0


def test_equality_tolerance_and_wraparound():
    assert Turn(0.5) == Turn(0.5 + 5e-16)
    assert Turn(0.5) != Turn(0.5 + 1e-12)
    # circular: values straddling 0 are close
    assert Turn(1e-16) == Turn(1 - 1e-16)


def test_dyadic_is_canonically_reduced():
    t = DyadicTurn(2, 2)
    assert (t.numerator, t.denom_exponent) == (1, 1)
    assert DyadicTurn(6, 3) == DyadicTurn(3, 2)
    zero = DyadicTurn(4, 2)  # wraps to a whole revolution
    assert (zero.numerator, zero.denom_exponent) == (0, 0)
    assert zero.is_zero()


def test_dyadic_equality_is_exact():
    assert DyadicTurn(1, 2) == DyadicTurn(1, 2)
    assert DyadicTurn(1, 30) != DyadicTurn(0, 0)
    # mixed comparison falls back to the float tolerance
    assert DyadicTurn(1, 2) == Turn(0.25)


def test_negation_mod_one():
    assert -DyadicTurn(1, 2) == DyadicTurn(3, 2)
    assert -DyadicTurn(0, 0) == DyadicTurn(0, 0)
    assert (-Turn(0.3)).value == pytest.approx(0.7)


def test_times_pow2_principal_value():
    assert DyadicTurn(5, 3).times_pow2(1) == DyadicTurn(1, 2)  # 5/4 mod 1
    assert DyadicTurn(5, 3).times_pow2(3) == DyadicTurn(0, 0)
    assert Turn(0.3).times_pow2(2) == Turn((0.3 * 4) % 1.0)


def test_dyadic_exponent():
    assert Turn(0.25).dyadic_exponent() == 2
    assert Turn(1 / 3).dyadic_exponent() is None
    assert DyadicTurn(1, 3).dyadic_exponent() == 3
    assert Turn(0.0).dyadic_exponent() == 0


def test_phase_factor_quarter_turns_exact():
    assert Turn(0.0).phase_factor() == 1.0 + 0.0j
    assert Turn(0.25).phase_factor() == 1.0j
    assert Turn(0.5).phase_factor() == -1.0 + 0.0j
    assert Turn(0.75).phase_factor() == -1.0j
    assert abs(Turn(1 / 8).phase_factor()) == pytest.approx(1.0, abs=1e-15)


def test_format_and_parse():
    assert format_turn(DyadicTurn(5, 3)) == "5/8"
    assert format_turn(DyadicTurn(0, 0)) == "0/1"
    assert parse_turn("5/8") == DyadicTurn(5, 3)
    third = parse_turn(format_turn(Turn(1 / 3)))
    assert third.value == Turn(1 / 3).value
    with pytest.raises(ValueError):
        parse_turn("1/3")  # denominator not a power of two
    with pytest.raises(ValueError):
        parse_turn("-1/4")
    with pytest.raises(ValueError):
        parse_turn("banana")


def test_denominator_cap():
    with pytest.raises(ValueError):
        DyadicTurn(1, 53)
    with pytest.raises(ValueError):
        DyadicTurn(1, -1)


def test_dyadic_rejects_float_fields():
    with pytest.raises(TypeError):
        DyadicTurn(0.5, 1)
    with pytest.raises(TypeError):
        DyadicTurn(1, 2.0)


_dyadics = st.builds(
    lambda num, k: DyadicTurn(num % (1 << k), k),
    st.integers(min_value=0, max_value=(1 << 30) - 1),
    st.integers(min_value=0, max_value=30),
)


def _as_fraction(t: DyadicTurn) -> Fraction:
    return Fraction(t.numerator, 1 << t.denom_exponent)


@settings(max_examples=300, deadline=None)
@given(_dyadics, _dyadics)
def test_dyadic_sum_never_rounds(a, b):
    total = a + b
    assert isinstance(total, DyadicTurn)
    assert _as_fraction(total) == (_as_fraction(a) + _as_fraction(b)) % 1
    # the float view agrees exactly with the exact fraction
    assert total.value == float(_as_fraction(total))


@settings(max_examples=300, deadline=None)
@given(_dyadics)
def test_dyadic_negation_never_rounds(a):
    assert _as_fraction(-a) == (-_as_fraction(a)) % 1
    assert _as_fraction(a) == _as_fraction(-(-a))


@settings(max_examples=300, deadline=None)
@given(_dyadics, st.integers(min_value=0, max_value=40))
def test_dyadic_times_pow2_matches_fraction(a, l):
    assert _as_fraction(a.times_pow2(l)) == (_as_fraction(a) * (1 << l)) % 1
