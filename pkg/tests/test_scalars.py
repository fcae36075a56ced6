import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cuspkit.algebra import (F3, OMEGA, Eisenstein, format_eisenstein, format_rational, omega_power,
                               parse_eisenstein, parse_rational)

W = cmath.exp(2j * cmath.pi / 3)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
eis = st.builds(Eisenstein, rationals, rationals)
nonzero_eis = eis.filter(bool)


def as_complex(z: Eisenstein) -> complex:
    return float(z.a) + float(z.b) * W


def test_omega_is_a_primitive_cube_root():
    assert OMEGA ** 3 == 1
    assert OMEGA != 1
    assert OMEGA ** 2 + OMEGA + 1 == 0
    assert omega_power(4) == OMEGA
    assert omega_power(-1) == OMEGA ** 2


@given(eis, eis)
def test_ring_ops_match_complex_embedding(x, y):
    for exact, approx in ((x + y, as_complex(x) + as_complex(y)),
                          (x - y, as_complex(x) - as_complex(y)),
                          (x * y, as_complex(x) * as_complex(y))):
        assert abs(as_complex(exact) - approx) <= 1e-6 * (1 + abs(approx))


@given(eis)
def test_norm_is_squared_absolute_value(x):
    assert x.norm() == x.a * x.a - x.a * x.b + x.b * x.b
    assert abs(float(x.norm()) - abs(as_complex(x)) ** 2) <= 1e-6 * (1 + float(x.norm()))
    assert x * x.conjugate() == x.norm()


@given(nonzero_eis, eis)
def test_division_inverts_multiplication(x, y):
    assert (y * x) / x == y
    assert x * x.inverse() == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Eisenstein(1, 1) / 0
    with pytest.raises(ZeroDivisionError):
        Eisenstein(0).inverse()


@given(eis)
def test_eisenstein_text_round_trip(x):
    assert parse_eisenstein(format_eisenstein(x)) == x


def test_rational_parsing():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-2") == -2
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_eisenstein_equals_rationals():
    assert Eisenstein(Fraction(1, 2)) == Fraction(1, 2)
    assert Eisenstein(3) == 3
    assert hash(Eisenstein(3)) == hash(Eisenstein(3, 0))
    assert Eisenstein(0, 1).is_rational() is False


@given(st.integers(), st.integers(min_value=1, max_value=2))
def test_f3_field(a, b):
    x, y = F3(a), F3(b)
    assert (x * y).value == (a * b) % 3
    assert (x / y) * y == x
    assert y * y.inverse() == 1


def test_f3_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F3(3).inverse()
