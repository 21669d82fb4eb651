"""Minimal orbits: charts, equivariant measures, and dimension oracles.

The minimal nonzero orbit O of the structure group carries a family of
equivariant measures, normalized here through polar charts

    integral f dmu_lam = int_0^oo avg_{sphere(s)} f(chart(t, s)) t^{lam*r - 1} dt

with the compact directions averaged against probability measures (all
normalizing constants are set to 1).  The chart is chosen so that the
radial coordinate of chart(t, ...) is exactly t.

Also here:

* quadrature rules for the radial integrals (a scaled generalized
  Laguerre rule for integrands decaying like exp(-2t), and a power-
  weighted Jacobi rule on [0, L] for Gaussian-type decay), with the
  moment identity int t^(a-1) e^(-2t) dt = Gamma(a)/2^a as the
  calibration gate;

* vanishing ideals of the orbit closures (determinant, or 2x2 minors)
  and an exact reduction routine used by the tangentiality checks;

* rational structure-group elements and their characters for the
  equivariance checks;

* dimension formulas for nilpotent orbits of the classical Lie algebras
  in terms of partitions, used to cross-check the minimal-orbit
  dimension tables against dim O computed from the registry.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi, roots_legendre

from . import linalg as la
from .algebras import Constants, JordanAlgebra
from .polynomials import Poly

__all__ = [
    "sphere_nodes", "radial_rule_laguerre", "radial_rule_jacobi",
    "radial_moment_exact", "OrbitChart", "ideal_generators",
    "reduce_mod_determinant", "chart_pullback", "structure_transforms",
    "transpose_partition", "nilpotent_orbit_dim", "minimal_orbit_report",
]


# ---------------------------------------------------------------------------
# sphere and radial quadrature
# ---------------------------------------------------------------------------

def sphere_nodes(dim: int, level: int = 24):
    """Nodes and weights for the normalized measure on S^dim.

    dim = 0 gives the two points, dim = 1 a trapezoid rule (exact for
    trigonometric polynomials of degree < level), dim = 2 a product
    Gauss-Legendre x trapezoid rule.
    """
    if dim == 0:
        return [((1.0,), 0.5), ((-1.0,), 0.5)]
    if dim == 1:
        out = []
        for m in range(level):
            phi = 2 * math.pi * m / level
            out.append(((math.cos(phi), math.sin(phi)), 1.0 / level))
        return out
    if dim == 2:
        zs, ws = roots_legendre(level)
        out = []
        for z, w in zip(zs, ws):
            rho = math.sqrt(1 - z * z)
            for m in range(2 * level):
                phi = 2 * math.pi * m / (2 * level)
                out.append(((rho * math.cos(phi), rho * math.sin(phi), z),
                            (w / 2) / (2 * level)))
        return out
    raise NotImplementedError(f"sphere dimension {dim} not needed here")


def radial_rule_laguerre(alpha_exp: float, T: int = 40, scale: float = 2.0):
    """Nodes/weights with int_0^oo t^alpha_exp e^(-scale t) h(t) dt ~ sum w h(t).

    Exact for polynomial h up to degree 2T - 1.
    """
    xs, ws = roots_genlaguerre(T, alpha_exp)
    ts = xs / scale
    wts = ws / scale ** (alpha_exp + 1)
    return ts, wts


def radial_rule_jacobi(alpha_exp: float, T: int = 60, upper: float = 12.0):
    """Nodes/weights with int_0^upper t^alpha_exp f(t) dt ~ sum w f(t).

    The power weight is built into the rule, so only f needs to be
    smooth; used for Gaussian-decay integrands (truncation at `upper`).
    """
    xs, ws = roots_jacobi(T, 0.0, alpha_exp)
    ts = upper * (xs + 1) / 2
    wts = ws * (upper / 2) ** (alpha_exp + 1)
    return ts, wts


def radial_moment_exact(a: float) -> float:
    """int_0^oo t^(a-1) e^(-2t) dt, the quadrature calibration target."""
    return math.gamma(a) / 2.0 ** a


# ---------------------------------------------------------------------------
# orbit charts
# ---------------------------------------------------------------------------

class OrbitChart:
    """Polar chart for the minimal orbit, radial coordinate-exact.

    ``point(t, sphere_coords)`` produces the orbit point whose radial
    coordinate |x| equals t; ``sphere_dims`` lists the dimensions of the
    compact parameter spheres.
    """

    def __init__(self, V: JordanAlgebra):
        self.V = V
        self.consts = V.consts
        fam = self.consts.family
        if fam == "R":
            self.sphere_dims = []
        elif fam == "Sym(k,R)":
            self.sphere_dims = [V.k - 1]
        elif fam == "M(k,R)":
            self.sphere_dims = [V.k - 1, V.k - 1]
        elif fam in ("R(p,q)", "R(1,k-1)"):
            p, q = V.p, V.q
            if q == 0:
                self.sphere_dims = [p - 1]
            else:
                self.sphere_dims = [p - 1, q - 1]
        elif fam == "R(k,0)":
            self.sphere_dims = [V.p - 1]
        else:
            raise NotImplementedError(f"no orbit chart for {fam}")

    def point(self, t, sph):
        fam = self.consts.family
        V = self.V
        if fam == "R":
            return [t]
        if fam == "Sym(k,R)":
            (w,) = sph
            k = V.k
            return [t * w[i] * w[j] for (i, j) in V.pairs]
        if fam == "M(k,R)":
            w, e = sph
            return [t * w[i] * e[j] for (i, j) in V.pairs]
        # bilinear-form families
        if V.q == 0:
            (w,) = sph
            # |t w| = 2t for the anisotropic family; rescale so the
            # radial coordinate is exactly t
            return [t / 2 * wi for wi in w]
        w, e = sph
        half = t / 2
        return [half * c for c in w] + [half * c for c in e]

    def nodes(self, lam, *, radial="jacobi", T=None, upper=12.0, level=16):
        """(point, weight) pairs approximating integration against dmu_lam."""
        c = self.consts
        alpha = float(Fraction(lam) * c.r - 1)
        if radial == "jacobi":
            ts, ws = radial_rule_jacobi(alpha, T or 60, upper)
        else:
            # the raw rule absorbs e^(-2t); undo it so the weights are
            # against t^alpha dt alone (integrands must decay like e^(-2t))
            ts, ws = radial_rule_laguerre(alpha, T or 40)
            ws = ws * np.exp(2 * ts)
        sph_nodes = [sphere_nodes(d, level) for d in self.sphere_dims]
        combos = [((), 1.0)]
        for nodes in sph_nodes:
            combos = [(prev + (pt,), pw * w) for prev, pw in combos for pt, w in nodes]
        out = []
        for t, wt in zip(ts, ws):
            for sph, sw in combos:
                out.append((self.point(t, sph), wt * sw))
        return out

    def integrate(self, f, lam, **kw):
        return sum(w * f(x) for x, w in self.nodes(lam, **kw))

    def nodes_arrays(self, lam, **kw):
        """Quadrature nodes as numpy arrays (points matrix, weights)."""
        nodes = self.nodes(lam, **kw)
        X = np.array([x for x, _ in nodes], dtype=float)
        W = np.array([w for _, w in nodes], dtype=float)
        return X, W

    def random_points(self, count, rng, tmin=0.3, tmax=3.0):
        """Sample points on the orbit (for pointwise checks)."""
        out = []
        for _ in range(count):
            t = rng.uniform(tmin, tmax)
            sph = []
            for d in self.sphere_dims:
                vec = [rng.gauss(0, 1) for _ in range(d + 1)]
                nrm = math.sqrt(sum(v * v for v in vec))
                sph.append(tuple(v / nrm for v in vec))
            out.append(self.point(t, tuple(sph)))
        return out


# ---------------------------------------------------------------------------
# vanishing ideals of the orbit closure
# ---------------------------------------------------------------------------

def ideal_generators(V: JordanAlgebra) -> list[Poly]:
    """Generators of the vanishing ideal of the orbit closure.

    Rank-one loci are cut out by the 2x2 minors for the matrix families
    and by the determinant for the bilinear-form families; the real line
    and the anisotropic family have open orbits (no generators).
    """
    fam = V.consts.family
    n = V.n
    if fam in ("R", "R(k,0)"):
        return []
    if fam in ("Sym(k,R)", "M(k,R)"):
        k = V.k
        sym = fam == "Sym(k,R)"

        def entry(i, j):
            if sym and i > j:
                i, j = j, i
            return Poly.var(n, V.index[(i, j)])

        gens = []
        for i in range(k):
            for j in range(i + 1, k):
                for a in range(k):
                    for b in range(a + 1, k):
                        gens.append(entry(i, a) * entry(j, b) - entry(i, b) * entry(j, a))
        # drop duplicates / zeros
        seen, out = set(), []
        for g in gens:
            key = tuple(sorted(g.terms.items()))
            if g.terms and key not in seen:
                seen.add(key)
                out.append(g)
        return out
    if fam in ("R(p,q)", "R(1,k-1)"):
        det = Poly.var(n, 0) * Poly.var(n, 0)
        for j, bd in enumerate(V.beta_diag, start=1):
            det = det - Poly.var(n, j, bd) * Poly.var(n, j)
        return [det]
    raise NotImplementedError(fam)


def reduce_mod_determinant(p: Poly, V: JordanAlgebra) -> Poly:
    """Exact normal form modulo the determinant for the bilinear families.

    On the orbit x1^2 = sum_j beta_j x_j^2, so every monomial is reduced
    to degree <= 1 in x1; the result is the zero polynomial iff p lies
    in the ideal (det).
    """
    n = V.n
    quad = Poly.zero(n)
    for j, bd in enumerate(V.beta_diag, start=1):
        quad = quad + Poly.var(n, j, bd) * Poly.var(n, j)
    cur = p
    while True:
        high = {m: c for m, c in cur.terms.items() if m[0] >= 2}
        if not high:
            return cur
        acc = Poly.zero(n)
        for m, c in cur.terms.items():
            if m[0] < 2:
                acc = acc + Poly(n, {m: c})
            else:
                rest = (m[0] - 2,) + m[1:]
                acc = acc + Poly(n, {rest: c}) * quad
        cur = acc


def chart_pullback(p: Poly, V: JordanAlgebra) -> Poly:
    """Pull a polynomial back through the rank-one parametrization.

    Sym(k): x_ij -> w_i w_j (k variables); M(k): x_ij -> u_i v_j
    (2k variables).  A polynomial vanishes on the orbit closure iff the
    pullback is the zero polynomial.
    """
    fam = V.consts.family
    k = V.k
    if fam == "Sym(k,R)":
        repl = [Poly.var(k, i) * Poly.var(k, j) for (i, j) in V.pairs]
        return p.subs(repl)
    if fam == "M(k,R)":
        repl = [Poly.var(2 * k, i) * Poly.var(2 * k, k + j) for (i, j) in V.pairs]
        return p.subs(repl)
    raise NotImplementedError(fam)


# ---------------------------------------------------------------------------
# structure group elements and equivariance
# ---------------------------------------------------------------------------

def _coord_matrix(V: JordanAlgebra, apply_fn):
    cols = [apply_fn(e) for e in V.basis()]
    return [[cols[j][i] for j in range(V.n)] for i in range(V.n)]


def structure_transforms(V: JordanAlgebra, mild: bool = False):
    """A few rational structure-group elements as (label, coordinate
    matrix, character chi) triples.  chi(g) = Det(g)^(r/n) as a float.

    With ``mild=True`` the non-isometric elements are chosen close to
    the identity, keeping the angular harmonics of transformed test
    functions low (useful when the compact directions are a product of
    spheres and quadrature levels have to stay moderate).
    """
    fam = V.consts.family
    c = V.consts
    out = []

    def add(label, mat):
        detv = la.det(mat)
        chi = float(detv) ** (c.r / c.n)
        out.append((label, mat, chi))

    if fam == "R":
        add("scale 3", [[Fraction(3)]])
        add("scale 1/2", [[Fraction(1, 2)]])
        return out
    if fam == "Sym(k,R)":
        k = V.k
        g = la.identity(k)
        g[0][0] = Fraction(5, 4) if mild else Fraction(2)
        mat = _coord_matrix(V, lambda x: V.from_matrix(
            la.mat_mul(g, la.mat_mul(V.to_matrix(x), la.transpose(g)))))
        add(f"diag({g[0][0]},1,...) congruence", mat)
        g2 = la.identity(k)
        g2[0][1] = Fraction(1, 6) if mild else Fraction(1, 3)
        mat2 = _coord_matrix(V, lambda x: V.from_matrix(
            la.mat_mul(g2, la.mat_mul(V.to_matrix(x), la.transpose(g2)))))
        add("shear congruence", mat2)
        return out
    if fam == "M(k,R)":
        k = V.k
        g = la.identity(k)
        g[0][0] = Fraction(5, 4) if mild else Fraction(2)
        h = la.identity(k)
        h[1][1] = Fraction(6, 5) if mild else Fraction(3)
        mat = _coord_matrix(V, lambda x: V.from_matrix(
            la.mat_mul(g, la.mat_mul(V.to_matrix(x), la.transpose(h)))))
        add("(g,h) two-sided", mat)
        return out
    # bilinear families: dilations, rational rotations and boosts
    n = V.n
    dil = la.mat_scale(Fraction(3, 2), la.identity(n))
    add("dilation 3/2", dil)
    if fam in ("R(p,q)", "R(1,k-1)") and V.q >= 1 and V.p >= 2:
        # hyperbolic rotation in the (x2, x_{p+1}) plane: preserves det
        ch, sh = (Fraction(25, 24), Fraction(7, 24)) if mild else (Fraction(5, 4), Fraction(3, 4))
        boost = la.identity(n)
        ii, jj = 1, V.p
        boost[ii][ii] = ch
        boost[ii][jj] = sh
        boost[jj][ii] = sh
        boost[jj][jj] = ch
        add(f"boost ({ch}, {sh})", boost)
    if V.p >= 3:
        rot = la.identity(n)
        rot[1][1] = Fraction(3, 5)
        rot[1][2] = Fraction(-4, 5)
        rot[2][1] = Fraction(4, 5)
        rot[2][2] = Fraction(3, 5)
        add("rotation (3/5, 4/5)", rot)
    return out


# ---------------------------------------------------------------------------
# nilpotent orbit dimensions via partitions
# ---------------------------------------------------------------------------

def transpose_partition(parts):
    parts = sorted(parts, reverse=True)
    if not parts:
        return []
    return [sum(1 for p in parts if p > i) for i in range(parts[0])]


def nilpotent_orbit_dim(kind: str, N: int, parts) -> int:
    """Complex dimension of the nilpotent orbit with the given partition.

    kind "sl": dim = N^2 - sum t_i^2;
    kind "so": dim = (N^2 - N)/2 - (sum t_i^2 - #odd parts)/2;
    kind "sp": dim = (N^2 + N)/2 - (sum t_i^2 + #odd parts)/2;
    t = transpose partition, #odd counts odd parts of the partition
    itself (with multiplicity).
    """
    if sum(parts) != N:
        raise ValueError("partition does not sum to N")
    t = transpose_partition(parts)
    s = sum(x * x for x in t)
    odd = sum(1 for p in parts if p % 2 == 1)
    if kind == "sl":
        return N * N - s
    if kind == "so":
        return (N * N - N) // 2 - (s - odd) // 2
    if kind == "sp":
        return (N * N + N) // 2 - (s + odd) // 2
    raise ValueError(kind)


def minimal_orbit_halfdim(kind: str, N: int = 0) -> int:
    """Half the complex dimension of the minimal nilpotent orbit."""
    table = {"sl": N - 1, "so": N - 3, "sp": N // 2,
             "g2": 3, "f4": 8, "e6": 11, "e7": 17, "e8": 29}
    return table[kind]


def _complexified_type(c: Constants):
    fam = c.family
    if fam in ("R",):
        return ("sl", 2)
    if fam in ("Sym(k,R)", "Sym(k,C)"):
        return ("sp", 2 * c.params[0])
    if fam in ("Herm(k,C)", "M(k,R)", "M(k,C)"):
        return ("sl", 2 * c.params[0])
    if fam in ("Herm(k,H)", "Skew(2k,R)", "Skew(2k,C)"):
        return ("so", 4 * c.params[0])
    if fam in ("R(1,k-1)", "C^k"):
        return ("so", c.params[0] + 2)
    if fam == "R(p,q)":
        return ("so", c.params[0] + c.params[1] + 2)
    if fam in ("Herm(3,O)", "Herm(3,Os)", "Herm(3,O)xC"):
        return ("e7", 0)
    raise KeyError(fam)


_MIN_PARTITION = {"sl": lambda N: [2] + [1] * (N - 2),
                  "so": lambda N: [2, 2] + [1] * (N - 4),
                  "sp": lambda N: [2] + [1] * (N - 2)}


def minimal_orbit_report(c: Constants) -> dict:
    """Cross-check dim O against the minimal nilpotent orbit of g.

    Three routes:

    * split families: dim O should equal the tabulated half-dimension
      of the minimal complex nilpotent orbit of the complexification;
    * complex families: dim O should equal the full complex dimension;
    * the remaining real forms: twice dim O should equal the real
      dimension of the minimal real nilpotent orbit, which we derive
      from the partition formulas and compare against the tabulated
      closed forms.

    Returns a record with derived/tabulated values and an ``agree``
    flag; for so(2k,1) the tabulated closed form 4k - 4 disagrees with
    the partition value 4k - 2 (see the ``notes`` field).
    """
    fam = c.family
    dim_o = c.orbit_dim
    rec = dict(family=fam, params=list(c.params), g=c.lie["g"][0],
               dim_orbit=dim_o, notes="")
    if fam in ("Sym(2k,C)&M(k,H)", "M(k,H)", "R(k,0)"):
        k = c.params[0]
        if fam == "Sym(2k,C)&M(k,H)":
            kind, N, parts = "sp", 4 * k, [2, 2] + [1] * (4 * k - 4)
            printed = 8 * k - 2
            label = f"sp({k},{k})"
        elif fam == "M(k,H)":
            kind, N, parts = "sl", 4 * k, [2, 2] + [1] * (4 * k - 4)
            printed = 8 * (2 * k) - 8
            label = f"su*({4 * k})"
        else:
            kind, N, parts = "so", k + 2, [3] + [1] * (k - 1)
            if k % 2 == 0:
                m = (k + 2) // 2          # so(2m-1, 1)
                printed = 4 * m - 4
            else:
                m = (k + 1) // 2          # so(2m, 1)
                printed = 4 * m - 4
            label = f"so({k + 1},1)"
        derived = nilpotent_orbit_dim(kind, N, parts)
        rec.update(route="real-form partition", derived_real_dim=derived,
                   printed_real_dim=printed,
                   identity_holds=(2 * dim_o == derived),
                   agree=(printed == derived))
        if not rec["agree"]:
            rec["notes"] = (
                f"tabulated closed form for {label} gives {printed}, the "
                f"partition formula gives {derived}; the exceptional "
                "isomorphism so(4,1) ~ sp(1,1) (whose tabulated value is 6) "
                "supports the partition value")
        return rec
    kind, N = _complexified_type(c)
    half = minimal_orbit_halfdim(kind, N)
    if kind in _MIN_PARTITION:
        derived = nilpotent_orbit_dim(kind, N, _MIN_PARTITION[kind](N))
        table_ok = derived == 2 * half
    else:
        derived, table_ok = 2 * half, True
    if c.complex_form:
        rec.update(route="complex group", derived_real_dim=2 * (2 * half),
                   identity_holds=(dim_o == 2 * half), agree=table_ok)
    else:
        rec.update(route="split form", derived_real_dim=2 * half,
                   identity_holds=(dim_o == half), agree=table_ok)
    return rec
