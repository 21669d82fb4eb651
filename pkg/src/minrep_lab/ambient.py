"""Closed families of functions on V that the Bessel operators act on exactly.

Two shapes cover every check in the suite:

* :class:`PolyGauss` -- ``p(x) * exp(-a (x|x))`` with ``p`` a rational
  polynomial (``a = 0`` gives plain polynomials).
* :class:`KLadder` -- ``sum_m p_m(x) * ktilde(alpha0 + m, |x|)`` where
  ``|x|^2 = (r/r0)(x|x)`` and ``ktilde`` is the renormalized K-Bessel
  function.  Differentiating shifts the order up by one, so the family is
  closed under the Bessel operator.

Both are closed under coordinate derivatives, multiplication by polynomials,
and the second-order Bessel operator

    B_lam f = sum_{a,b} (d^2 f / dx_a dx_b) P(eb_a, eb_b) x + lam * sum_a (df/dx_a) eb_a

written out against the tau-dual basis ``eb``.  All coefficients stay exact
Fractions, so operator identities reduce to polynomial identities.

Deciding whether a KLadder vanishes *on the minimal orbit* needs two facts:

* the restriction of a polynomial to the orbit has a computable normal form
  (pass to the rank-one chart, or reduce modulo the determinant);
* for non-half-integer base order, ``ktilde_alpha`` and ``ktilde_{alpha+1}``
  are not related by any rational function of the radius, so a two-term
  combination ``A * ktilde_alpha + B * ktilde_{alpha+1}`` vanishes only if
  ``A`` and ``B`` do.  Half-integer orders are elementary
  (``sqrt(pi) e^{-s} * Laurent(s)``) and are expanded outright; there the
  even and odd parts in ``|x|`` are tested separately unless ``|x|`` itself
  restricts to a polynomial on the orbit (V = R, where ``|x| = x``, and
  symmetric matrices, where ``|x| = tr x`` on the rank-one cone).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from . import linalg as la
from .kbessel import ktilde
from .orbits import chart_pullback, reduce_mod_determinant
from .polynomials import Poly
from .radial import elementary_profile

__all__ = [
    "BesselEngine", "PolyGauss", "KLadder", "ExpLinear",
    "orbit_restrict_zero", "quad_grad_pair", "radial_to_explinear",
]


def orbit_restrict_zero(V, p: Poly) -> bool:
    """Does the polynomial ``p`` vanish identically on the minimal orbit?"""
    fam = V.consts.family
    if fam in ("R", "R(k,0)"):
        # the orbit is open in V, so only the zero polynomial vanishes on it
        return not p.terms
    if fam in ("R(p,q)", "R(1,k-1)"):
        return not reduce_mod_determinant(p, V).terms
    if fam in ("Sym(k,R)", "M(k,R)"):
        return not chart_pullback(p, V).terms
    raise ValueError(f"no orbit normal form for family {fam!r}")


class BesselEngine:
    """Per-algebra caches for the coordinate form of the Bessel operator."""

    def __init__(self, V):
        self.V = V
        self.n = V.n

    # -- polynomial building blocks ------------------------------------

    @cached_property
    def quad_form(self) -> Poly:
        """(x|x) as a polynomial."""
        n, G = self.n, self.V.inner_gram
        terms = {}
        for i in range(n):
            for j in range(n):
                if G[i][j]:
                    mono = [0] * n
                    mono[i] += 1
                    mono[j] += 1
                    key = tuple(mono)
                    terms[key] = terms.get(key, Fraction(0)) + G[i][j]
        return Poly(self.n, terms)

    @cached_property
    def radius_sq(self) -> Poly:
        """R(x) = |x|^2 = (r/r0)(x|x)."""
        return self.V.radial_sq_factor() * self.quad_form

    @cached_property
    def _dQ(self):
        return [self.quad_form.diff(a) for a in range(self.n)]

    @cached_property
    def _dR(self):
        return [self.radius_sq.diff(a) for a in range(self.n)]

    @cached_property
    def _dual(self):
        """Coordinates of the tau-dual basis: dual[a][g] = (eb_a)_g."""
        return self.V.dual_basis()

    @cached_property
    def _ptx(self):
        """ptx[a][b][g] = coefficient row so that
        [P(eb_a, eb_b) x]_g = sum_d ptx[a][b][g][d] * x_d."""
        return self.V.bessel_tensor

    def linear(self, coeffs) -> Poly:
        return Poly(self.n, {tuple(1 if j == i else 0 for j in range(self.n)): Fraction(c)
                             for i, c in enumerate(coeffs) if c})

    def inner_linear(self, u) -> Poly:
        """(x|u) as a polynomial."""
        return self.linear(la.mat_vec(self.V.inner_gram, u))

    def tau_linear(self, u) -> Poly:
        """tau(x, u) as a polynomial."""
        return self.linear(la.mat_vec(self.V.tau_gram, u))

    def trace_linear(self) -> Poly:
        return self.tau_linear(self.V.unit())

    # -- function constructors ------------------------------------------

    def gauss(self, a, poly=None) -> "PolyGauss":
        if poly is None:
            poly = Poly.const(self.n, 1)
        return PolyGauss(self, Fraction(a), poly)

    def poly_fn(self, poly: Poly) -> "PolyGauss":
        return PolyGauss(self, Fraction(0), poly)

    def ladder(self, alpha0, terms=None) -> "KLadder":
        """``sum_m terms[m] * ktilde(alpha0 + m, |x|)``; a plain Poly entry is
        allowed and ``ladder(alpha)`` alone means ``ktilde(alpha, |x|)``."""
        if terms is None:
            terms = {0: Poly.const(self.n, 1)}
        fixed = {}
        for m, p in terms.items():
            if not isinstance(p, Poly):
                p = Poly.const(self.n, Fraction(p))
            if p.terms:
                fixed[int(m)] = p
        return KLadder(self, Fraction(alpha0), fixed)

    # -- Bessel assembly --------------------------------------------------

    def _second_derivs(self, f):
        n = self.n
        d1 = [f.deriv(a) for a in range(n)]
        d2 = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                d2[a][b] = d1[a].deriv(b)
                d2[b][a] = d2[a][b]
        return d1, d2

    def bessel_component(self, f, lam, g: int, _cache=None):
        """Coordinate g of B_lam f, in the same function family as f."""
        return self.bessel_weighted(f, lam, [Fraction(1) if j == g else Fraction(0)
                                             for j in range(self.n)])

    def bessel_components(self, f, lam) -> list:
        """All coordinates of B_lam f (the V-valued Bessel operator)."""
        n = self.n
        lam = Fraction(lam)
        d1, d2 = self._second_derivs(f)
        out = []
        for g in range(n):
            acc = f.zero_like()
            for a in range(n):
                for b in range(n):
                    lin = self.linear(self._ptx[a][b][g])
                    if lin.terms:
                        acc = acc + d2[a][b].mul_poly(lin)
                c = lam * self._dual[a][g]
                if c:
                    acc = acc + d1[a].scale(c)
            out.append(acc)
        return out

    def bessel_weighted(self, f, lam, weights):
        """sum_g weights[g] * (B_lam f)_g, assembled in one pass."""
        n = self.n
        lam = Fraction(lam)
        weights = [Fraction(w) for w in weights]
        d1, d2 = self._second_derivs(f)
        acc = f.zero_like()
        for a in range(n):
            for b in range(n):
                row = [Fraction(0)] * n
                for g in range(n):
                    if weights[g]:
                        prow = self._ptx[a][b][g]
                        for d in range(n):
                            row[d] += weights[g] * prow[d]
                lin = self.linear(row)
                if lin.terms:
                    acc = acc + d2[a][b].mul_poly(lin)
            c = lam * sum(weights[g] * self._dual[a][g] for g in range(n))
            if c:
                acc = acc + d1[a].scale(c)
        return acc

    def bessel_tau(self, f, lam, u):
        """tau(B_lam f, u) -- the pairing used by the v-slot generators."""
        return self.bessel_weighted(f, lam, la.mat_vec(self.V.tau_gram, u))

    def bessel_inner(self, f, lam, v):
        """(B_lam f | v)."""
        return self.bessel_weighted(f, lam, la.mat_vec(self.V.inner_gram, v))

    def directional(self, f, field_matrix):
        """D_{Mx} f = sum_g (M x)_g d f/dx_g for a linear vector field."""
        acc = f.zero_like()
        for g in range(self.n):
            lin = self.linear(field_matrix[g])
            if lin.terms:
                acc = acc + f.deriv(g).mul_poly(lin)
        return acc

    def euler(self, f):
        """E f = sum_g x_g df/dx_g."""
        return self.directional(f, la.identity(self.n))


def radial_to_explinear(engine: BesselEngine, profile, radius_linear: Poly) -> "ExpLinear":
    """Restrict a half-integer-order radial profile ``sum c * s^a *
    ktilde(gamma0+b, s)`` to a cone on which the radius equals the linear
    polynomial ``radius_linear``.  Every ktilde order must be half-integer so
    the profile is ``sqrt(pi) e^{-s} * Laurent(s)``; the returned function is
    the restriction divided by the overall sqrt(pi)."""
    laurent: dict[int, Fraction] = {}
    for (a, b), c in profile.terms.items():
        for p, cp in elementary_profile(profile.gamma0 + b).items():
            k = a - p
            s = laurent.get(k, Fraction(0)) + c * cp
            if s:
                laurent[k] = s
            else:
                laurent.pop(k, None)
    poly = Poly.zero(engine.n)
    for k, c in laurent.items():
        if k < 0:
            raise ValueError("profile is singular at the vertex of the cone")
        poly = poly + c * radius_linear ** k
    return ExpLinear(engine, radius_linear, poly)


def quad_grad_pair(engine: BesselEngine, f: "PolyGauss", g: "PolyGauss") -> list:
    """Components of P(df/dx, dg/dx) x with tau-gradients: the middle term of
    the Bessel product rule."""
    n = engine.n
    fa = [f.deriv(a) for a in range(n)]
    gb = [g.deriv(b) for b in range(n)]
    out = []
    for gam in range(n):
        acc = None
        for a in range(n):
            for b in range(n):
                lin = engine.linear(engine._ptx[a][b][gam])
                if not lin.terms:
                    continue
                piece = (fa[a] * gb[b]).mul_poly(lin)
                acc = piece if acc is None else acc + piece
        out.append(acc if acc is not None else (f * g).zero_like())
    return out


class PolyGauss:
    """p(x) * exp(-a (x|x)); with a = 0 this is a plain polynomial."""

    __slots__ = ("engine", "a", "poly")

    def __init__(self, engine: BesselEngine, a: Fraction, poly: Poly):
        if poly.nvars != engine.n:
            raise ValueError("polynomial has the wrong number of variables")
        self.engine = engine
        self.a = Fraction(a)
        self.poly = poly

    def zero_like(self) -> "PolyGauss":
        return PolyGauss(self.engine, self.a, Poly.zero(self.engine.n))

    def deriv(self, alpha: int) -> "PolyGauss":
        p = self.poly.diff(alpha)
        if self.a:
            p = p - self.a * self.poly * self.engine._dQ[alpha]
        return PolyGauss(self.engine, self.a, p)

    def mul_poly(self, q: Poly) -> "PolyGauss":
        return PolyGauss(self.engine, self.a, self.poly * q)

    def scale(self, c) -> "PolyGauss":
        return PolyGauss(self.engine, self.a, Fraction(c) * self.poly)

    def __add__(self, other: "PolyGauss") -> "PolyGauss":
        if not isinstance(other, PolyGauss):
            return NotImplemented
        if other.engine is not self.engine or other.a != self.a:
            raise ValueError("cannot add Gaussians with different envelopes")
        return PolyGauss(self.engine, self.a, self.poly + other.poly)

    def __sub__(self, other: "PolyGauss") -> "PolyGauss":
        return self + other.scale(-1)

    def __mul__(self, other: "PolyGauss") -> "PolyGauss":
        if not isinstance(other, PolyGauss):
            return NotImplemented
        if other.engine is not self.engine:
            raise ValueError("mixed engines")
        return PolyGauss(self.engine, self.a + other.a, self.poly * other.poly)

    def is_zero(self, on_orbit: bool = False) -> bool:
        if not on_orbit:
            return not self.poly.terms
        return orbit_restrict_zero(self.engine.V, self.poly)

    def eval(self, x) -> float:
        import math
        q = float(self.engine.quad_form.eval(list(x)))
        return float(self.poly.eval(list(x))) * math.exp(-float(self.a) * q)

    def __repr__(self):
        return f"PolyGauss(a={self.a}, poly={self.poly!r})"


class ExpLinear:
    """p(x) * exp(-ell(x)) with a linear exponent ell.

    On cones where the radius restricts to a linear polynomial (V = R with
    |x| = x, symmetric matrices with |x| = tr x on rank one), every
    half-integer-order KLadder is of this shape, which makes compositions of
    Bessel operators with mixed imaginary weights tractable.
    """

    __slots__ = ("engine", "ell", "poly")

    def __init__(self, engine: BesselEngine, ell: Poly, poly: Poly):
        self.engine = engine
        self.ell = ell
        self.poly = poly

    def zero_like(self) -> "ExpLinear":
        return ExpLinear(self.engine, self.ell, Poly.zero(self.engine.n))

    def deriv(self, alpha: int) -> "ExpLinear":
        dl = self.ell.diff(alpha)
        c = dl.coeff(tuple([0] * self.engine.n)) if dl.terms else Fraction(0)
        return ExpLinear(self.engine, self.ell,
                         self.poly.diff(alpha) - c * self.poly)

    def mul_poly(self, q: Poly) -> "ExpLinear":
        return ExpLinear(self.engine, self.ell, self.poly * q)

    def scale(self, c) -> "ExpLinear":
        return ExpLinear(self.engine, self.ell, Fraction(c) * self.poly)

    def __add__(self, other: "ExpLinear") -> "ExpLinear":
        if not isinstance(other, ExpLinear):
            return NotImplemented
        if other.engine is not self.engine or other.ell != self.ell:
            raise ValueError("cannot add different exponents")
        return ExpLinear(self.engine, self.ell, self.poly + other.poly)

    def __sub__(self, other: "ExpLinear") -> "ExpLinear":
        return self + other.scale(-1)

    def is_zero(self, on_orbit: bool = True) -> bool:
        if not on_orbit:
            return not self.poly.terms
        return orbit_restrict_zero(self.engine.V, self.poly)

    def eval(self, x) -> float:
        import math
        xs = list(x)
        return float(self.poly.eval(xs)) * math.exp(-float(self.ell.eval(xs)))

    def __repr__(self):
        return f"ExpLinear(exp(-{self.ell!r}) * {self.poly!r})"


class KLadder:
    """sum_m p_m(x) * ktilde(alpha0 + m, |x|) with polynomial p_m."""

    __slots__ = ("engine", "alpha0", "terms")

    def __init__(self, engine: BesselEngine, alpha0: Fraction, terms):
        self.engine = engine
        self.alpha0 = Fraction(alpha0)
        self.terms = {int(m): p for m, p in terms.items() if p.terms}

    def zero_like(self) -> "KLadder":
        return KLadder(self.engine, self.alpha0, {})

    def _aligned(self, other: "KLadder"):
        shift = other.alpha0 - self.alpha0
        if shift.denominator != 1:
            raise ValueError("incompatible ladder base orders")
        return int(shift)

    def deriv(self, alpha: int) -> "KLadder":
        # d/dx_a [p * ktilde_m(|x|)] = (dp/dx_a) ktilde_m - (p/4)(dR/dx_a) ktilde_{m+1}
        dR = self.engine._dR[alpha]
        out: dict[int, Poly] = {}
        for m, p in self.terms.items():
            dp = p.diff(alpha)
            if dp.terms:
                out[m] = out.get(m, Poly.zero(self.engine.n)) + dp
            down = Fraction(-1, 4) * p * dR
            if down.terms:
                out[m + 1] = out.get(m + 1, Poly.zero(self.engine.n)) + down
        return KLadder(self.engine, self.alpha0, out)

    def mul_poly(self, q: Poly) -> "KLadder":
        return KLadder(self.engine, self.alpha0,
                       {m: p * q for m, p in self.terms.items()})

    def scale(self, c) -> "KLadder":
        c = Fraction(c)
        return KLadder(self.engine, self.alpha0,
                       {m: c * p for m, p in self.terms.items()})

    def __add__(self, other: "KLadder") -> "KLadder":
        if not isinstance(other, KLadder):
            return NotImplemented
        if other.engine is not self.engine:
            raise ValueError("mixed engines")
        shift = self._aligned(other)
        out = dict(self.terms)
        for m, p in other.terms.items():
            k = m + shift
            out[k] = out.get(k, Poly.zero(self.engine.n)) + p
        return KLadder(self.engine, self.alpha0, out)

    def __sub__(self, other: "KLadder") -> "KLadder":
        return self + other.scale(-1)

    # -- zero testing on the orbit ---------------------------------------

    def _collapse_pair(self):
        """Rewrite R^N * self as A * ktilde_base + B * ktilde_{base+1} using
        R * ktilde_{g+1} = 4 ktilde_{g-1} + 4 g ktilde_g; returns (base, A, B)."""
        if not self.terms:
            z = Poly.zero(self.engine.n)
            return self.alpha0, z, z
        R = self.engine.radius_sq
        base = self.alpha0 + min(self.terms)
        work = {m - min(self.terms): p for m, p in self.terms.items()}
        while max(work) >= 2:
            top = max(work)
            ptop = work.pop(top)
            work = {m: R * p for m, p in work.items()}
            g = base + top - 1
            for m, c in ((top - 2, Fraction(4)), (top - 1, 4 * g)):
                if c:
                    add = c * ptop
                    work[m] = work.get(m, Poly.zero(self.engine.n)) + add
            work = {m: p for m, p in work.items() if p.terms}
            if not work:
                z = Poly.zero(self.engine.n)
                return base, z, z
        z = Poly.zero(self.engine.n)
        return base, work.get(0, z), work.get(1, z)

    def _elementary_parts(self):
        """For half-integer orders: self = sqrt(pi) e^{-|x|} R^{-N} *
        (E(x) + |x| * O(x)); returns (E, O) cleared of denominators."""
        n = self.engine.n
        R = self.engine.radius_sq
        # collect s-exponents: term p_m * s^{-j} for each Laurent entry
        pieces: dict[int, Poly] = {}   # power of s -> poly
        for m, p in self.terms.items():
            prof = elementary_profile(self.alpha0 + m)
            for j, c in prof.items():   # contributes c * s^{-j}
                k = -j
                pieces[k] = pieces.get(k, Poly.zero(n)) + c * p
        if not pieces:
            z = Poly.zero(n)
            return z, z
        lo = min(pieces)
        # multiply by s^{2N} with 2N >= -lo to clear negative powers, keeping parity
        shift = 0
        while lo + 2 * shift < 0:
            shift += 1
        even = Poly.zero(n)
        odd = Poly.zero(n)
        for k, p in pieces.items():
            e = k + 2 * shift
            if e % 2 == 0:
                even = even + p * R ** (e // 2)
            else:
                odd = odd + p * R ** ((e - 1) // 2)
        return even, odd

    def is_zero(self, on_orbit: bool = True) -> bool:
        """Is this function identically zero (on the minimal orbit)?"""
        if not self.terms:
            return True
        V = self.engine.V
        if not on_orbit:
            # ambient zero: after collapsing onto two rungs the profiles are
            # independent over rational functions of the radius, so both
            # polynomial coefficients must vanish; for half-integer orders
            # the even/odd elementary parts play the same role (the radius
            # form is irreducible, so E + |x| O = 0 forces E = O = 0)
            if (2 * self.alpha0).denominator == 1 \
                    and self.alpha0.denominator == 2:
                even, odd = self._elementary_parts()
                return not even.terms and not odd.terms
            _, A, B = self._collapse_pair()
            return not A.terms and not B.terms
        if (2 * self.alpha0).denominator == 1 and self.alpha0.denominator == 2:
            even, odd = self._elementary_parts()
            fam = V.consts.family
            if fam == "R":
                # |x| = x on the orbit (0, inf)
                combined = even + Poly.var(1, 0) * odd
                return not combined.terms
            if fam == "Sym(k,R)":
                # |x| agrees with tr x on the rank-one cone
                combined = even + self.engine.trace_linear() * odd
                return orbit_restrict_zero(V, combined)
            if fam == "R(1,k-1)":
                # |x| agrees with 2 x0 on the forward cone
                x0 = Poly.var(self.engine.n, 0)
                combined = even + (2 * x0) * odd
                return orbit_restrict_zero(V, combined)
            return orbit_restrict_zero(V, even) and orbit_restrict_zero(V, odd)
        base, A, B = self._collapse_pair()
        return orbit_restrict_zero(V, A) and orbit_restrict_zero(V, B)

    def eval(self, x) -> float:
        import math
        xs = list(x)
        s = math.sqrt(float(self.engine.radius_sq.eval(xs)))
        tot = 0.0
        for m, p in self.terms.items():
            tot += float(p.eval(xs)) * ktilde(float(self.alpha0 + m), s)
        return tot

    def __repr__(self):
        bits = [f"({p!r})*Kt[{self.alpha0 + m}]"
                for m, p in sorted(self.terms.items())]
        return " + ".join(bits) if bits else "KLadder(0)"
