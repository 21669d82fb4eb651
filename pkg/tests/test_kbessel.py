import math

import mpmath as mp
import numpy as np
import pytest

from minrep_lab.kbessel import (
    genfun_complex, itilde, itilde_complex, ktilde, ktilde_complex)

from _kbessel_fixtures import KTILDE_REFERENCE


@pytest.mark.parametrize("alpha,x,expected", KTILDE_REFERENCE)
def test_ktilde_against_frozen_reference(alpha, x, expected):
    want = float(expected)
    got = float(ktilde(alpha, x))
    assert got == pytest.approx(want, rel=5e-13)


def test_ktilde_vectorized():
    xs = np.array([0.3, 1.2, 5.0])
    out = ktilde(1.0, xs)
    assert out.shape == (3,)
    assert out[1] == pytest.approx(float(ktilde(1.0, 1.2)))


def test_ktilde_half_integer_closed_form():
    # K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}, so ktilde(-1/2, x) = sqrt(pi)/2 e^{-x}
    for x in (0.2, 1.0, 3.7):
        want = math.sqrt(math.pi) / 2 * math.exp(-x)
        assert float(ktilde(-0.5, x)) == pytest.approx(want, rel=1e-13)


def test_itilde_series_value_at_zero():
    assert itilde_complex(1.5, 0) == pytest.approx(1 / math.gamma(2.5))


def test_itilde_real_matches_complex():
    for a in (0.0, 0.75, 2.0):
        for x in (0.1, 1.0, 4.0):
            assert float(itilde(a, x)) == pytest.approx(
                itilde_complex(a, x).real, rel=1e-12)


def test_ktilde_complex_matches_real_axis():
    for a, x, expected in KTILDE_REFERENCE[::7]:
        z = ktilde_complex(a, x + 0j)
        assert z.imag == pytest.approx(0.0, abs=1e-18 * abs(z.real))
        assert z.real == pytest.approx(float(expected), rel=1e-12)


def test_wronskian_style_identity():
    # d/dx [ x^{2a+1} (ktilde' itilde - ktilde itilde') ] = 0 for solutions
    # of f'' + (2a+1)/x f' - f = 0; the conserved product is -2^{2a}.
    a = 0.75
    for x in (0.5, 1.5, 4.0):
        h = 1e-6
        kd = (float(ktilde(a, x + h)) - float(ktilde(a, x - h))) / (2 * h)
        idv = (float(itilde(a, x + h)) - float(itilde(a, x - h))) / (2 * h)
        w = x ** (2 * a + 1) * (kd * float(itilde(a, x))
                                - float(ktilde(a, x)) * idv)
        assert w == pytest.approx(-2.0 ** (2 * a), rel=1e-4)


def test_genfun_reduces_to_ground_profile_at_t_zero():
    # G(0, s) = itilde_{a/2}(0) ktilde_{b/2}(s) = ktilde_{b/2}(s)/Gamma(a/2+1)
    alpha, beta, s = 1.0, 2.0, 1.3
    want = float(ktilde(beta / 2, s)) / math.gamma(alpha / 2 + 1)
    got = genfun_complex(alpha, beta, 0.0, s)
    assert got.real == pytest.approx(want, rel=1e-12)
    assert got.imag == pytest.approx(0.0, abs=1e-15)


def test_genfun_complex_circle_is_analytic():
    # Taylor coefficients from two contour radii must agree (analyticity
    # inside |t| < 1); this is the backbone of the dual-radius check.
    alpha, beta, s = 2.0, 1.0, 0.9

    def coeff(j, radius, nsamp=32):
        acc = mp.mpf(0)
        for m in range(nsamp):
            t = radius * mp.e ** (2j * mp.pi * m / nsamp)
            acc += genfun_complex(alpha, beta, t, s) / t ** j
        return complex(acc / nsamp)

    for j in (0, 1, 2):
        c1, c2 = coeff(j, 0.3), coeff(j, 0.5)
        assert c1.real == pytest.approx(c2.real, rel=1e-9, abs=1e-12)
        assert abs(c1.imag) < 1e-12
