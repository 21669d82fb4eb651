"""Exact ladder calculus for the one-variable K-Bessel profiles."""

from fractions import Fraction

import mpmath as mp
import pytest

from minrep_lab.kbessel import genfun_complex, ktilde
from minrep_lab.radial import (
    RadialLadder, bessel_ode_apply, dtilde_apply, dtilde_eigenvalue,
    lambda_hat_profiles)


half = Fraction(1, 2)


def test_pure_profile_eval_matches_scipy():
    f = RadialLadder.pure(Fraction(3, 4))
    for s in (0.3, 1.0, 4.2):
        assert f.eval(s) == pytest.approx(float(ktilde(0.75, s)), rel=1e-12)


def test_deriv_is_downward_ladder():
    # d/ds ktilde_g = -(s/2) ktilde_{g+1}
    g = Fraction(2, 3)
    f = RadialLadder.pure(g)
    d = f.deriv()
    want = RadialLadder(g, {(1, 1): Fraction(-1, 2)})
    assert not (d - want)


def test_collapse_pair_identity():
    # ktilde_{g-1} = (s^2/4) ktilde_{g+1} - g ktilde_g: the collapsed
    # two-rung form must evaluate to the same function.
    g0 = Fraction(1, 3)
    f = RadialLadder(g0, {(0, 0): 1, (0, 1): 2, (0, 2): 1})
    base, A, B = f.collapse_pair()
    for s in (0.5, 2.0):
        lo = sum(float(c) * s ** a for a, c in A.items())
        hi = sum(float(c) * s ** a for a, c in B.items())
        got = (lo * float(ktilde(float(base), s))
               + hi * float(ktilde(float(base + 1), s)))
        assert got == pytest.approx(f.eval(s), rel=1e-12)


def test_is_zero_detects_ladder_relation():
    # s^2/4 ktilde_{g+1} - g ktilde_g - ktilde_{g-1} == 0
    g = Fraction(5, 4)
    f = RadialLadder(g - 1, {
        (2, 2): Fraction(1, 4), (0, 1): -g, (0, 0): -1})
    assert f.is_zero()
    assert not (f + RadialLadder.pure(g - 1)).is_zero()


def test_is_zero_half_integer_orders():
    # the same relation at an elementary (half-integer) base order
    g = Fraction(3, 2)
    f = RadialLadder(g - 1, {
        (2, 2): Fraction(1, 4), (0, 1): -g, (0, 0): -1})
    assert f.is_zero()
    assert not RadialLadder.pure(g).is_zero()


def test_bessel_ode_annihilates_matching_order():
    # B_alpha ktilde_{alpha} = 0; at shifted order the result is nonzero
    a = Fraction(3, 5)
    assert bessel_ode_apply(a, RadialLadder.pure(a)).is_zero()
    assert not bessel_ode_apply(a, RadialLadder.pure(a + 1)).is_zero()


@pytest.mark.parametrize("alpha,beta", [
    (Fraction(0), Fraction(-1)),
    (Fraction(1), Fraction(1)),
    (Fraction(1, 2), Fraction(2)),
    (Fraction(2), Fraction(0)),
])
def test_dtilde_eigenfunctions_exact(alpha, beta):
    profiles = lambda_hat_profiles(alpha, beta, 3)
    for j, prof in enumerate(profiles):
        defect = dtilde_apply(alpha, beta, prof) - prof.scale(
            dtilde_eigenvalue(alpha, j))
        assert defect.is_zero()


def test_dtilde_eigenvalue_values():
    assert dtilde_eigenvalue(Fraction(1), 0) == 0
    assert dtilde_eigenvalue(Fraction(1), 2) == 4 * 2 * (2 + 1 + 1)
    assert dtilde_eigenvalue(half, 1) == 4 * (1 + half + 1)


def test_ground_profile_is_pure_bessel():
    # Lambda-hat_0 = Gamma(alpha/2+1) * Lambda_0 equals ktilde_{beta/2}
    alpha, beta = Fraction(1), Fraction(2)
    prof = lambda_hat_profiles(alpha, beta, 0)[0]
    for s in (0.1, 1.0, 7.5):
        assert prof.eval(s) == pytest.approx(float(ktilde(1.0, s)), rel=1e-12)


def test_profiles_match_generating_function_taylor():
    # j-th Taylor coefficient of G(t, s) in t equals Lambda_j(s)
    # = Lambda-hat_j(s)/Gamma(alpha/2+1); sample one point per order.
    alpha, beta, s = Fraction(2), Fraction(1), mp.mpf("1.7")
    profiles = lambda_hat_profiles(alpha, beta, 2)
    gam = mp.gamma(float(alpha) / 2 + 1)
    nsamp, radius = 32, mp.mpf("0.4")
    samples = [genfun_complex(
        2.0, 1.0, radius * mp.e ** (2j * mp.pi * m / nsamp), s)
        for m in range(nsamp)]
    for j, prof in enumerate(profiles):
        want = sum(
            f * complex(mp.e ** (-2j * mp.pi * m * j / nsamp))
            for m, f in enumerate(samples)) / nsamp / float(radius) ** j
        assert prof.eval(float(s)) / float(gam) == pytest.approx(
            want.real, rel=1e-9)
        assert abs(want.imag) < 1e-12


def test_mul_power_and_theta():
    f = RadialLadder.pure(Fraction(1, 2))
    g = f.mul_power(2)
    for s in (0.4, 1.3):
        assert g.eval(s) == pytest.approx(s * s * f.eval(s), rel=1e-12)
    th = f.theta()
    h = 1e-7
    s = 1.1
    num = s * (f.eval(s + h) - f.eval(s - h)) / (2 * h)
    assert th.eval(s) == pytest.approx(num, rel=1e-6)


def test_mixed_base_orders_rejected():
    f = RadialLadder.pure(Fraction(1, 2))
    g = RadialLadder.pure(Fraction(1, 3))
    with pytest.raises(ValueError):
        f + g
