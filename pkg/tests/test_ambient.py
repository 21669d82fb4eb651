"""Function models the Bessel operators act on in closed exact form."""

import math
import random
from fractions import Fraction

import pytest

from minrep_lab.algebras import constants
from minrep_lab.ambient import (
    BesselEngine, KLadder, orbit_restrict_zero, quad_grad_pair,
    radial_to_explinear)
from minrep_lab.orbits import OrbitChart, ideal_generators
from minrep_lab.polynomials import Poly
from minrep_lab.radial import RadialLadder


FAMILIES = [
    ("R", ()), ("Sym(k,R)", (2,)), ("Sym(k,R)", (3,)), ("M(k,R)", (2,)),
    ("R(1,k-1)", (3,)), ("R(p,q)", (2, 2)), ("R(p,q)", (2, 3)),
    ("R(k,0)", (2,)), ("R(k,0)", (3,)),
]


def engine_for(name, *params):
    return BesselEngine(constants(name, *params).algebra())


def test_engine_for_smoke():
    assert engine_for("R").n == 1


def battery(eng):
    n = eng.n
    x0 = Poly.var(n, 0)
    xl = Poly.var(n, n - 1)
    return [
        eng.gauss(Fraction(1)),
        eng.gauss(Fraction(1), x0),
        eng.gauss(Fraction(2), x0 * xl + 1),
    ]


@pytest.mark.parametrize("name,params", FAMILIES)
def test_bessel_components_commute(name, params):
    eng = engine_for(name, *params)
    C = eng.V.consts
    lam = C.lambda1 if C.lambda1 > 0 else Fraction(1, 2)
    for f in battery(eng):
        comps = eng.bessel_components(f, lam)
        for a in range(min(eng.n, 3)):
            for b in range(a + 1, min(eng.n, 3)):
                ab = eng.bessel_components(comps[b], lam)[a]
                ba = eng.bessel_components(comps[a], lam)[b]
                assert (ab - ba).is_zero(on_orbit=False)


@pytest.mark.parametrize("name,params", FAMILIES[:5])
def test_bessel_product_rule(name, params):
    # B_lam(fg) = (B_lam f) g + 2 P(grad f, grad g) x + f (B_lam g)
    eng = engine_for(name, *params)
    n = eng.n
    f = eng.gauss(Fraction(1), Poly.var(n, 0))
    g = eng.poly_fn(Poly.var(n, n - 1) ** 2)
    lam = Fraction(1, 2)
    lhs = eng.bessel_components(f * g, lam)
    ff = eng.bessel_components(f, lam)
    gg = eng.bessel_components(g, lam)
    cross = quad_grad_pair(eng, f, g)
    for a in range(n):
        rhs = ff[a] * g + f * gg[a] + cross[a].scale(2)
        assert (lhs[a] - rhs).is_zero(on_orbit=False)


@pytest.mark.parametrize("name,params", [
    ("Sym(k,R)", (2,)), ("R(1,k-1)", (3,)), ("R(p,q)", (2, 2)),
    ("M(k,R)", (2,)),
])
def test_tangential_at_orbit_points(name, params):
    # at the equivariant-measure parameter, all Bessel components of a
    # generator of the vanishing ideal must vanish on the orbit
    C = constants(name, *params)
    V = C.algebra()
    eng = BesselEngine(V)
    lam = C.lambda1
    chart = OrbitChart(V)
    rng = random.Random(23)
    pts = chart.random_points(6, rng)
    for q in ideal_generators(V):
        comps = eng.bessel_components(eng.gauss(Fraction(1), q), lam)
        for comp in comps[: min(3, len(comps))]:
            for pt in pts:
                assert comp.eval(pt) == pytest.approx(0.0, abs=1e-10)


def test_tangential_fails_off_parameter():
    # tangentiality is special to the measure parameter: shift lam and
    # the restriction no longer vanishes
    C = constants("Sym(k,R)", 2)
    V = C.algebra()
    eng = BesselEngine(V)
    q = ideal_generators(V)[0]
    f = eng.gauss(Fraction(1), q)
    bad = eng.bessel_components(f, C.lambda1 + 2)
    chart = OrbitChart(V)
    pts = chart.random_points(4, random.Random(5))
    worst = max(abs(c.eval(p)) for c in bad for p in pts)
    assert worst > 1e-4


def test_exact_orbit_restriction():
    V = constants("Sym(k,R)", 2).algebra()
    eng = BesselEngine(V)
    det = ideal_generators(V)[0]
    assert orbit_restrict_zero(V, det)
    assert orbit_restrict_zero(V, det * Poly.var(V.n, 1))
    assert not orbit_restrict_zero(V, Poly.var(V.n, 0))


def test_kladder_derivative_matches_numeric():
    eng = engine_for("Sym(k,R)", 2)
    f = eng.ladder(Fraction(1, 3), {0: Poly.const(eng.n, 1)})
    g = f.deriv(0)
    x = [0.7, 0.4, 0.9]
    h = 1e-6
    up = f.eval([x[0] + h, x[1], x[2]])
    dn = f.eval([x[0] - h, x[1], x[2]])
    assert g.eval(x) == pytest.approx((up - dn) / (2 * h), rel=1e-5)


def test_kladder_zero_decision_generic_order():
    eng = engine_for("Sym(k,R)", 2)
    one = Poly.const(eng.n, 1)
    f = eng.ladder(Fraction(1, 3), {0: one})
    assert not f.is_zero()
    assert (f - f).is_zero()
    # the two-rung collapse must not confuse distinct rungs
    g = eng.ladder(Fraction(1, 3), {0: one, 1: -one})
    assert not g.is_zero()


def test_kladder_zero_decision_half_integer():
    # half-integer orders are elementary; on-orbit the radius of a
    # symmetric rank-one matrix is its trace, so mixed-parity ladders
    # can still cancel exactly
    eng = engine_for("Sym(k,R)", 2)
    tr = eng.trace_linear()
    z2 = eng.radius_sq
    f = eng.ladder(-Fraction(1, 2), {
        2: z2.map_coeffs(lambda c: c / 4),
        1: -Fraction(1, 2) * Poly.const(eng.n, 1),
        0: -Poly.const(eng.n, 1)})
    # ktilde_{-1/2} relation: (z^2/4) ktilde_{3/2} - (1/2) ktilde_{1/2}
    # - ktilde_{-1/2} = 0 identically
    assert f.is_zero(on_orbit=False)
    # trace-odd combination that only cancels on the orbit
    g = eng.ladder(Fraction(1, 2), {1: tr}) - eng.ladder(
        Fraction(1, 2), {1: tr})
    assert g.is_zero()


def test_radial_to_explinear_rejects_singular_profile():
    eng = engine_for("Sym(k,R)", 2)
    with pytest.raises(ValueError):
        radial_to_explinear(
            eng, RadialLadder.pure(Fraction(1, 2)), eng.trace_linear())


def test_radial_to_explinear_eval():
    # regular half-integer profiles transported to the cone stay pointwise
    # equal
    eng = engine_for("Sym(k,R)", 2)
    prof = RadialLadder.pure(Fraction(-1, 2))
    g = radial_to_explinear(eng, prof, eng.trace_linear())
    chart = OrbitChart(eng.V)
    from minrep_lab.kbessel import ktilde
    for pt in chart.random_points(4, random.Random(2)):
        t = pt[0] + pt[1]
        # radial_to_explinear strips the overall sqrt(pi) factor
        assert g.eval(pt) * math.sqrt(math.pi) == pytest.approx(
            float(ktilde(-0.5, t)), rel=1e-10)


def test_lorentz_radius_is_twice_height_on_orbit():
    # |x|^2 = (r/r0)(x|x) restricts to (2 x0)^2 on the forward light cone
    V = constants("R(1,k-1)", 3).algebra()
    eng = BesselEngine(V)
    x0sq = Poly.var(eng.n, 0) ** 2
    diff = eng.radius_sq - 4 * x0sq
    assert orbit_restrict_zero(V, diff)


def test_gauss_eval_and_euler():
    eng = engine_for("R")
    f = eng.gauss(Fraction(1, 2), Poly.var(1, 0))
    # f(x) = x e^{-x^2/2}; Euler operator x f' = (1 - x^2) f
    ef = eng.euler(f)
    for x in (0.3, 1.7):
        assert f.eval([x]) == pytest.approx(x * math.exp(-x * x / 2))
        assert ef.eval([x]) == pytest.approx(
            (1 - x * x) * f.eval([x]), rel=1e-12)
