"""Registry rows and the multiplication laws of the computable algebras."""

import random
from fractions import Fraction

import pytest

from minrep_lab import linalg as la
from minrep_lab.algebras import (
    UnsupportedFamilyError, constants, family_names)


COMPUTABLE = [
    ("R", ()),
    ("Sym(k,R)", (2,)),
    ("Sym(k,R)", (3,)),
    ("M(k,R)", (2,)),
    ("R(1,k-1)", (3,)),
    ("R(p,q)", (2, 2)),
    ("R(p,q)", (2, 3)),
    ("R(k,0)", (2,)),
    ("R(k,0)", (3,)),
]

DATA_ONLY = [
    ("Herm(k,C)", (3,)), ("Herm(k,H)", (3,)), ("Herm(3,O)", ()),
    ("Skew(2k,R)", (2,)), ("Sym(k,C)", (2,)), ("M(k,C)", (2,)),
    ("Skew(2k,C)", (2,)), ("C^k", (3,)), ("Herm(3,Os)", ()),
    ("Herm(3,O)xC", ()), ("Sym(2k,C)&M(k,H)", (2,)), ("M(k,H)", (2,)),
]


def rational_vectors(V, count, seed=11):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append([Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                    for _ in range(V.n)])
    return out


def test_registry_has_eighteen_families():
    names = family_names()
    assert len(names) == 18
    assert len(set(names)) == 18
    assert names[0] == "R"


def test_every_family_builds_constants():
    for name in family_names():
        params = {"Sym(k,R)": (2,), "Herm(k,C)": (3,), "Herm(k,H)": (3,),
                  "R(1,k-1)": (3,), "M(k,R)": (2,), "Skew(2k,R)": (2,),
                  "R(p,q)": (2, 2), "Sym(k,C)": (2,), "M(k,C)": (2,),
                  "Skew(2k,C)": (2,), "C^k": (3,),
                  "Sym(2k,C)&M(k,H)": (2,), "M(k,H)": (2,),
                  "R(k,0)": (2,)}.get(name, ())
        C = constants(name, *params)
        assert C.n >= 1 and C.r >= 1
        assert C.lie["g"][1] > 0


def test_unknown_family_rejected():
    with pytest.raises(KeyError):
        constants("Oct(3)")
    with pytest.raises(ValueError):
        constants("Sym(k,R)")


@pytest.mark.parametrize("name,params", DATA_ONLY)
def test_data_only_rows_guard_algebra(name, params):
    C = constants(name, *params)
    with pytest.raises(UnsupportedFamilyError):
        C.algebra()


def test_invariant_formulas_sample():
    sym3 = constants("Sym(k,R)", 3)
    assert sym3.nu == -1
    assert sym3.mu == Fraction(1, 2)
    assert sym3.lambda1 == Fraction(1, 2)
    assert sym3.sigma(Fraction(1, 2)) == Fraction(1, 2)

    r23 = constants("R(p,q)", 2, 3)
    assert (r23.n, r23.r, r23.d, r23.e) == (5, 2, 3, 0)
    assert (r23.n0, r23.r0, r23.d0) == (4, 2, 2)
    assert r23.nu == 0 and r23.mu == 1

    rk0 = constants("R(k,0)", 3)
    assert (rk0.n, rk0.r, rk0.r0) == (3, 2, 1)
    assert rk0.e == 2 and rk0.d0 == 0
    assert rk0.sigma(Fraction(1, 2)) == 1


def test_wallach_sets():
    sym3 = constants("Sym(k,R)", 3)
    assert sym3.wallach_discrete == [0, Fraction(1, 2), 1]
    assert sym3.wallach_continuous_from == 1
    assert sym3.lambda1 in sym3.wallach_discrete


def test_orbit_dim_formula():
    assert constants("R").orbit_dim == 1
    assert constants("Sym(k,R)", 3).orbit_dim == 3
    assert constants("R(p,q)", 2, 3).orbit_dim == 4
    assert constants("R(k,0)", 3).orbit_dim == 3


def test_split_flag():
    assert constants("Sym(k,R)", 2).split
    assert not constants("R(k,0)", 3).split


def test_str_includes_size():
    assert str(constants("Sym(k,R)", 2)) == "Sym(k,R)[2]"
    assert str(constants("Herm(3,O)")) == "Herm(3,O)"


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_commutative_and_jordan_identity(name, params):
    V = constants(name, *params).algebra()
    for x, y in zip(rational_vectors(V, 4), rational_vectors(V, 4, seed=5)):
        assert V.mul(x, y) == V.mul(y, x)
        xx = V.mul(x, x)
        lhs = V.mul(x, V.mul(xx, y))
        rhs = V.mul(xx, V.mul(x, y))
        assert lhs == rhs


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_unit_and_trace(name, params):
    C = constants(name, *params)
    V = C.algebra()
    e = V.unit()
    for x in rational_vectors(V, 3):
        assert V.mul(e, x) == x
    assert V.trace(e) == C.r
    assert V.determinant(e) == 1


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_trace_form_associative(name, params):
    V = constants(name, *params).algebra()
    xs = rational_vectors(V, 3, seed=2)
    ys = rational_vectors(V, 3, seed=3)
    zs = rational_vectors(V, 3, seed=4)
    for x, y, z in zip(xs, ys, zs):
        assert V.tau(V.mul(x, y), z) == V.tau(x, V.mul(y, z))
        assert V.tau(x, y) == V.tau(y, x)


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_quad_rep_determinant_power(name, params):
    # Det P(x) = det(x)^{2n/r}
    C = constants(name, *params)
    V = C.algebra()
    power = Fraction(2 * C.n, C.r)
    assert power.denominator == 1
    for x in rational_vectors(V, 2, seed=9):
        lhs = la.det(V.quad_rep(x))
        assert lhs == V.determinant(x) ** int(power)


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_frame_is_orthogonal_idempotent_resolution(name, params):
    C = constants(name, *params)
    V = C.algebra()
    frame = V.frame()
    assert len(frame) == C.r0
    total = [sum(c[i] for c in frame) for i in range(V.n)]
    assert total == V.unit()
    for i, ci in enumerate(frame):
        assert V.mul(ci, ci) == ci
        for cj in frame[i + 1:]:
            zero = [Fraction(0)] * V.n
            assert V.mul(ci, cj) == zero


@pytest.mark.parametrize("name,params", COMPUTABLE)
def test_peirce_profile_matches_registry(name, params):
    C = constants(name, *params)
    V = C.algebra()
    prof = V.peirce_profile()
    assert prof == {"r0": C.r0, "e": C.e, "d": C.d, "n0": C.n0, "d0": C.d0}


def test_quad_rep_frame_action():
    V = constants("Sym(k,R)", 2).algebra()
    c1, c2 = V.frame()
    p = V.quad_rep(c1)
    assert la.mat_vec(p, c1) == c1
    assert la.mat_vec(p, c2) == [Fraction(0)] * V.n
    assert V.quad_rep(V.unit()) == la.identity(V.n)


def test_lorentz_cone_matches_bilinear_row():
    # R(1,k-1) and R(p,q) with p = 1 describe the same algebra
    a = constants("R(1,k-1)", 3)
    assert (a.n, a.r, a.d, a.n0, a.r0) == (3, 2, 1, 3, 2)
    assert a.euclidean
    b = constants("R(p,q)", 2, 2)
    assert not b.euclidean
    assert b.vplus == "R(1,q)"
