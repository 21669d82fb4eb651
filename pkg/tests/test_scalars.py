"""Exact scalar towers: Gaussian rationals and the pi-graded ring."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minrep_lab.scalars import CQ, I, PI, PiScalar, as_fraction


rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12)


def test_as_fraction_accepts_int_and_fraction():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction(Fraction(-1, 4)) == Fraction(-1, 4)


def test_as_fraction_rejects_float():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_cq_basic_arithmetic():
    z = CQ(1, 2)
    w = CQ(Fraction(1, 2), -1)
    assert z + w == CQ(Fraction(3, 2), 1)
    assert z * w == CQ(Fraction(5, 2), 0)
    assert z - z == CQ(0)
    assert -z == CQ(-1, -2)


def test_cq_division_and_conjugate():
    z = CQ(3, 4)
    assert z * z.conj() == CQ(25)
    assert (z / z) == CQ(1)
    assert (CQ(1) / CQ(0, 1)) == CQ(0, -1)
    with pytest.raises(ZeroDivisionError):
        CQ(1) / CQ(0)


def test_cq_i_squares_to_minus_one():
    assert I * I == CQ(-1)
    assert complex(I) == 1j


def test_cq_hash_and_bool():
    assert hash(CQ(2, 0)) == hash(CQ(2))
    assert not CQ(0)
    assert CQ(0, Fraction(1, 3))


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_cq_ring_laws(a, b, c, d, e, f):
    x, y, z = CQ(a, b), CQ(c, d), CQ(e, f)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(rationals, rationals)
def test_cq_field_inverse(a, b):
    z = CQ(a, b)
    if z:
        assert z * (CQ(1) / z) == CQ(1)


def test_pi_scalar_grading():
    #  (2 + 3*pi) * pi  ==  2*pi + 3*pi^2
    s = (PiScalar.coerce(2) + 3 * PI) * PI
    assert s == PiScalar.pi_power(1, 2) + PiScalar.pi_power(2, 3)


def test_pi_scalar_division_by_monomial():
    s = PiScalar.pi_power(2, Fraction(3, 2))
    assert s / PI == PiScalar.pi_power(1, Fraction(3, 2))
    with pytest.raises((ValueError, ZeroDivisionError)):
        s / (PI + 1)


def test_pi_scalar_float():
    import math
    assert float(PI) == pytest.approx(math.pi)
    assert float(PiScalar.pi_power(2, Fraction(1, 2))) == pytest.approx(
        math.pi ** 2 / 2)


@given(rationals, rationals, rationals)
def test_pi_scalar_ring_laws(a, b, c):
    x = a + b * PI
    y = c * PI * PI
    z = PiScalar.coerce(b)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


def test_pi_scalar_zero_collapses():
    assert not (PI - PI)
    assert PiScalar.pi_power(3, 0) == PiScalar.coerce(0)
