"""The conformal action on orbit functions: brackets, K-types, Casimir."""

from fractions import Fraction

import pytest

from minrep_lab.algebras import constants
from minrep_lab.conformal import ConformalAlgebra
from minrep_lab.polynomials import Poly
from minrep_lab.representation import (
    BesselRep, CFn, bessel_symmetry_residual, casimir_scalar,
    casimir_scalar_radial, harmonic_polys, rank_one_intertwine_residual,
    window_norm_scan)


def small_battery(rep):
    E = rep.engine
    n = rep.V.n
    x0 = Poly.var(n, 0)
    return [
        CFn.real(E.gauss(Fraction(1))),
        CFn(re=E.gauss(Fraction(1), x0)),
        CFn(re=E.gauss(Fraction(2)), im=E.gauss(Fraction(1), x0)),
    ]


@pytest.mark.parametrize("name,params", [
    ("Sym(k,R)", (2,)), ("R(p,q)", (2, 2)), ("R(k,0)", (2,)),
])
def test_commutator_identity_on_sample_pairs(name, params):
    C = constants(name, *params)
    rep = BesselRep.minimal(C)
    A = ConformalAlgebra(C.algebra())
    pairs = [(0, A.dim - 1), (1, A.dim - 2), (0, C.n + 1), (2, A.dim - 1)]
    fails = rep.commutator_failures(small_battery(rep), pairs=pairs)
    assert fails == []


def test_commutator_defect_shape():
    C = constants("Sym(k,R)", 2)
    rep = BesselRep.minimal(C)
    psi = small_battery(rep)[0]
    d = rep.commutator_defect(0, rep.alg.dim - 1, psi)
    assert isinstance(d, CFn)
    assert d.is_zero(on_orbit=False)


def test_lowest_ktype_euclidean_families():
    for name, params in (("Sym(k,R)", (2,)), ("R(1,k-1)", (3,))):
        rep = BesselRep.minimal(constants(name, *params))
        assert rep.lowest_ktype_defects() == []


def test_lowest_ktype_annihilation_families():
    for name, params, lam in (
            ("M(k,R)", (3,), None), ("R(k,0)", (2,), Fraction(1, 2))):
        C = constants(name, *params)
        rep = BesselRep(C.algebra(), lam) if lam is not None \
            else BesselRep.minimal(C)
        assert rep.lowest_ktype_defects() == []


def test_lowest_ktype_fails_at_wrong_weight():
    # the ground state is special to lambda1: shift the weight and the
    # eigen-identity must break
    C = constants("Sym(k,R)", 2)
    rep = BesselRep(C.algebra(), C.lambda1 + 1)
    assert rep.lowest_ktype_defects() != []


@pytest.mark.parametrize("p,q,kmax", [(2, 2, 2), (2, 4, 2), (3, 3, 1)])
def test_bilinear_ladder_coefficients(p, q, kmax):
    rep = BesselRep.minimal(constants("R(p,q)", p, q))
    assert rep.bilinear_ladder_defects(kmax=kmax) == []


def test_ladder_rejects_transposed_signature():
    rep = BesselRep.minimal(constants("R(p,q)", 3, 2))
    with pytest.raises(ValueError):
        rep.bilinear_ladder_defects()


def test_raising_never_vanishes_odd_signature():
    rep = BesselRep.minimal(constants("R(p,q)", 2, 3))
    assert rep.raising_nonzero(kmax=10)


def test_harmonic_polys_are_harmonic():
    n, p = 5, 3
    for k in (0, 1, 2, 3):
        polys = harmonic_polys(n, p, k)
        assert polys, f"no harmonics at degree {k}"
        for phi in polys:
            assert phi.degree() == k or k == 0
            lap = Poly.zero(n)
            for j in range(p):
                lap = lap + phi.diff(j).diff(j)
            assert lap == Poly.zero(n)


def test_casimir_scalar_two_routes_agree():
    for name, params in (("Sym(k,R)", (2,)), ("R(p,q)", (2, 3)),
                         ("M(k,R)", (2,)), ("R(k,0)", (3,))):
        C = constants(name, *params)
        for j in range(4):
            assert casimir_scalar(C, j) == casimir_scalar_radial(C, j)


def test_casimir_scalar_frozen_value():
    assert casimir_scalar(constants("Sym(k,R)", 2), 1) == Fraction(-17, 24)


def test_casimir_operator_route():
    rep = BesselRep.minimal(constants("Sym(k,R)", 2))
    for j in (0, 1):
        assert rep.casimir_defect(j).is_zero()


def test_symmetry_residual_small_and_flags_divergence():
    C = constants("Sym(k,R)", 2)
    V = C.algebra()
    res = bessel_symmetry_residual(V, C.lambda1)
    assert res <= 1e-6
    E = BesselRep.minimal(C).engine
    bad = E.ladder(Fraction(C.nu, 2), {1: E.inner_linear(V.frame()[0])})
    with pytest.raises(ValueError):
        bessel_symmetry_residual(
            V, C.lambda1, pairs=[(bad, bad)], T=60, flag_divergent=True)


def test_rank_one_intertwining_residual():
    for lam in (0.5, 1.5):
        assert rank_one_intertwine_residual(lam) <= 1e-6


def test_window_norm_scan_shapes():
    inside = window_norm_scan(2, 2.0, dps=15)
    outside = window_norm_scan(2, -0.5, dps=15)
    assert len(inside) == len(outside) == 4
    assert inside[-1] / inside[0] < 10.0
    assert outside[-1] / outside[0] >= 10.0
