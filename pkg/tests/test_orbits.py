"""Orbit charts, measures, vanishing ideals, and dimension oracles."""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from minrep_lab.algebras import constants
from minrep_lab.orbits import (
    OrbitChart, ideal_generators, minimal_orbit_halfdim,
    minimal_orbit_report, nilpotent_orbit_dim, radial_moment_exact,
    radial_rule_jacobi, radial_rule_laguerre, reduce_mod_determinant,
    sphere_nodes, transpose_partition)


def test_transpose_partition():
    assert transpose_partition([3, 1]) == [2, 1, 1]
    assert transpose_partition([2, 2, 1]) == [3, 2]
    assert transpose_partition([]) == []


def test_nilpotent_orbit_dims_classical():
    # minimal orbits: sl_N -> 2(N-1), sp_N -> N, so_N -> 2(N-3)+... 2N-6
    assert nilpotent_orbit_dim("sl", 4, [2, 1, 1]) == 6
    assert nilpotent_orbit_dim("sp", 4, [2, 1, 1]) == 4
    assert nilpotent_orbit_dim("so", 7, [2, 2, 1, 1, 1]) == 8
    # principal orbit of sl_3 has dimension 6
    assert nilpotent_orbit_dim("sl", 3, [3]) == 6
    with pytest.raises(ValueError):
        nilpotent_orbit_dim("sl", 4, [2, 1])


def test_minimal_halfdim_consistent_with_partitions():
    for N in (4, 5, 6):
        assert 2 * minimal_orbit_halfdim("sl", N) == nilpotent_orbit_dim(
            "sl", N, [2] + [1] * (N - 2))
        assert 2 * minimal_orbit_halfdim("sp", 2 * N) == nilpotent_orbit_dim(
            "sp", 2 * N, [2] + [1] * (2 * N - 2))
    for N in (7, 8, 9):
        assert 2 * minimal_orbit_halfdim("so", N) == nilpotent_orbit_dim(
            "so", N, [2, 2] + [1] * (N - 4))


def test_radial_rules_hit_gamma_moments():
    # int_0^inf t^(a-1) e^(-2t) dt = Gamma(a) / 2^a
    for a in (0.5, 1.0, 2.5):
        want = radial_moment_exact(a)
        assert want == pytest.approx(math.gamma(a) / 2 ** a, rel=1e-12)
        ts, ws = radial_rule_laguerre(a - 1)  # weight t^{a-1} e^{-2t} built in
        assert float(np.sum(ws)) == pytest.approx(want, rel=1e-10)
        ts, ws = radial_rule_jacobi(a - 1, T=80, upper=14.0)
        got = float(np.sum(ws * np.exp(-2 * ts)))
        assert got == pytest.approx(want, rel=1e-8)


def test_jacobi_rule_integrates_gaussian_weight():
    # Gaussian decay is what the symmetry quadrature actually feeds in
    ts, ws = radial_rule_jacobi(1.0, T=80, upper=10.0)
    got = float(np.sum(ws * np.exp(-(ts ** 2))))
    assert got == pytest.approx(0.5, rel=1e-8)  # int t e^{-t^2} = 1/2


FAMILIES = [
    ("Sym(k,R)", (2,)), ("Sym(k,R)", (3,)), ("M(k,R)", (2,)),
    ("R(1,k-1)", (3,)), ("R(p,q)", (2, 2)), ("R(p,q)", (2, 3)),
    ("R(k,0)", (2,)),
]


@pytest.mark.parametrize("name,params", FAMILIES)
def test_chart_points_satisfy_ideal(name, params):
    V = constants(name, *params).algebra()
    chart = OrbitChart(V)
    gens = ideal_generators(V)
    rng = random.Random(17)
    for pt in chart.random_points(8, rng):
        for g in gens:
            assert float(g.eval(pt)) == pytest.approx(0.0, abs=1e-9)


def test_chart_radial_coordinate_is_t():
    # on the chart the radial coordinate is the trace: tr(point(t)) == t
    V = constants("Sym(k,R)", 2).algebra()
    chart = OrbitChart(V)
    rng = random.Random(1)
    for pt in chart.random_points(5, rng, tmin=0.5, tmax=2.0):
        tr = pt[0] + pt[1]  # diagonal coordinates of a 2x2 symmetric matrix
        assert 0.5 <= tr <= 2.0


def test_reduce_mod_determinant_kills_ideal():
    # exact normal form on the bilinear families: ideal members reduce to 0
    from minrep_lab.polynomials import Poly
    for name, params in (("R(1,k-1)", (3,)), ("R(p,q)", (2, 2))):
        V = constants(name, *params).algebra()
        for g in ideal_generators(V):
            assert reduce_mod_determinant(g, V) == Poly.zero(V.n)
        x0 = Poly.var(V.n, 0)
        assert reduce_mod_determinant(x0, V) == x0
        sq = x0 * x0
        red = reduce_mod_determinant(sq, V)
        assert red != sq and red.degree() <= 2


def test_integrate_ground_state_norm():
    # ||e^{-tr x}||^2 against d-mu_lam on the 1x1 cone: int t^{lam-1} e^{-2t}
    V = constants("R").algebra()
    chart = OrbitChart(V)
    lam = 0.75
    got = chart.integrate(lambda x: math.exp(-2 * x[0]), lam)
    assert got == pytest.approx(math.gamma(lam) / 2 ** lam, rel=1e-8)


def test_orbit_report_split_family():
    rec = minimal_orbit_report(constants("Sym(k,R)", 3))
    assert rec["route"] == "split form"
    assert rec["identity_holds"] and rec["agree"]
    assert rec["dim_orbit"] == 3


def test_orbit_report_all_registry_rows_have_route():
    from minrep_lab.algebras import family_names
    params = {"Sym(k,R)": (3,), "Herm(k,C)": (3,), "Herm(k,H)": (3,),
              "R(1,k-1)": (3,), "M(k,R)": (3,), "Skew(2k,R)": (3,),
              "R(p,q)": (2, 3), "Sym(k,C)": (3,), "M(k,C)": (3,),
              "Skew(2k,C)": (3,), "C^k": (3,),
              "Sym(2k,C)&M(k,H)": (2,), "M(k,H)": (2,), "R(k,0)": (3,)}
    for name in family_names():
        rec = minimal_orbit_report(constants(name, *params.get(name, ())))
        assert rec["identity_holds"], rec
        assert rec["route"] in (
            "split form", "complex group", "real-form partition")


def test_orbit_report_lorentz_discrepancy():
    # the one documented table disagreement: so(2k,1) closed form
    rec = minimal_orbit_report(constants("R(k,0)", 3))
    assert rec["identity_holds"]
    assert not rec["agree"]
    assert rec["printed_real_dim"] == 4
    assert rec["derived_real_dim"] == 6
    assert "so(4,1)" in rec["notes"]
    # the even case agrees
    rec2 = minimal_orbit_report(constants("R(k,0)", 2))
    assert rec2["agree"] and rec2["identity_holds"]
