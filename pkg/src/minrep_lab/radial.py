"""Exact calculus of one-variable K-Bessel ladders.

A :class:`RadialLadder` is a finite sum

    f(s) = sum_{a,b} c[a,b] * s**a * ktilde(gamma0 + b, s)

with Fraction coefficients and integer powers ``a`` (negative allowed)
and ladder offsets ``b >= 0`` relative to a rational base order
``gamma0``.  The class closes under d/ds, the Euler operator
theta = s d/ds, the second-order operator

    B_alpha = d^2/ds^2 + (2*alpha+1)/s d/ds - 1 = s^{-2}(theta^2 + 2*alpha*theta) - 1,

and the fourth-order operator

    Dtilde_{alpha,beta} = s^{-2} ((theta+alpha+beta)(theta+alpha) - s^2)(theta(theta+beta) - s^2),

because of the two ladder identities

    d/ds ktilde_g(s)   = -(s/2) ktilde_{g+1}(s),
    ktilde_{g-1}(s)    = (s^2/4) ktilde_{g+1}(s) - g ktilde_g(s).

Zero testing is exact.  For a non-half-integer base order the collapsed
pair representation A(s) ktilde_g + B(s) ktilde_{g+1} vanishes iff
A = B = 0 (the two profiles are independent over rational functions:
their small-s expansions involve s^{-2g} resp. log s terms).  For
half-integer orders the profiles are elementary,

    ktilde_{m+1/2}(s) = sqrt(pi) e^{-s} P_m(1/s)

with rational Laurent polynomials P_m, and the zero test expands
through them instead, which is sound unconditionally.

The eigenprofiles Lambda_j of Dtilde are produced exactly by
:func:`lambda_hat_profiles` from the generating function

    (1-t)^{-(alpha+beta+2)/2} itilde_{alpha/2}(st/(1-t)) ktilde_{beta/2}(s/(1-t))
"""

from __future__ import annotations

from fractions import Fraction

from .kbessel import ktilde
from .scalars import as_fraction

__all__ = ["RadialLadder", "bessel_ode_apply", "dtilde_apply",
           "dtilde_eigenvalue", "lambda_hat_profiles", "elementary_profile"]


class RadialLadder:
    __slots__ = ("gamma0", "terms")

    def __init__(self, gamma0, terms=None):
        self.gamma0 = as_fraction(gamma0)
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                c = as_fraction(c)
                if c:
                    self.terms[(int(a), int(b))] = c

    @staticmethod
    def pure(gamma0) -> "RadialLadder":
        """The profile ktilde_{gamma0}(s) itself."""
        return RadialLadder(gamma0, {(0, 0): Fraction(1)})

    def _check(self, other: "RadialLadder"):
        if self.gamma0 != other.gamma0:
            raise ValueError("ladder base mismatch")

    def __add__(self, other: "RadialLadder") -> "RadialLadder":
        self._check(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k, Fraction(0)) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return RadialLadder(self.gamma0, t)

    def __neg__(self):
        return RadialLadder(self.gamma0, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RadialLadder":
        c = as_fraction(c)
        if not c:
            return RadialLadder(self.gamma0)
        return RadialLadder(self.gamma0, {k: c * v for k, v in self.terms.items()})

    def mul_power(self, m: int) -> "RadialLadder":
        return RadialLadder(self.gamma0,
                            {(a + m, b): c for (a, b), c in self.terms.items()})

    def deriv(self) -> "RadialLadder":
        t: dict[tuple[int, int], Fraction] = {}

        def put(k, c):
            s = t.get(k, Fraction(0)) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)

        for (a, b), c in self.terms.items():
            if a:
                put((a - 1, b), a * c)
            put((a + 1, b + 1), -c / 2)
        return RadialLadder(self.gamma0, t)

    def theta(self) -> "RadialLadder":
        return self.deriv().mul_power(1)

    def theta_shifted(self, shift) -> "RadialLadder":
        """(theta + shift) f"""
        return self.theta() + self.scale(shift)

    # -- zero testing --------------------------------------------------

    def collapse_pair(self):
        """Rewrite with ladder offsets in {bmin, bmin+1}; returns
        (base_order, A, B) with A, B Laurent coefficient dicts {power: Fraction}."""
        if not self.terms:
            return self.gamma0, {}, {}
        bmin = min(b for (_, b) in self.terms)
        work = dict(self.terms)
        while True:
            high = [k for k in work if k[1] >= bmin + 2]
            if not high:
                break
            high.sort(key=lambda k: -k[1])
            (a, b) = high[0]
            c = work.pop((a, b))
            g = self.gamma0 + b - 1  # ktilde_{g+1} = (4/s^2)(ktilde_{g-1} + g*ktilde_g)
            for k2, c2 in (((a - 2, b - 2), 4 * c), ((a - 2, b - 1), 4 * c * g)):
                s = work.get(k2, Fraction(0)) + c2
                if s:
                    work[k2] = s
                else:
                    work.pop(k2, None)
        A = {a: c for (a, b), c in work.items() if b == bmin}
        B = {a: c for (a, b), c in work.items() if b == bmin + 1}
        return self.gamma0 + bmin, A, B

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        base, A, B = self.collapse_pair()
        if base.denominator == 2:
            # half-integer orders are elementary; expand and test exactly
            lau: dict[int, Fraction] = {}
            for part, off in ((A, 0), (B, 1)):
                for a, c in part.items():
                    for p, cp in _elementary_laurent(base + off).items():
                        k = a - p
                        s = lau.get(k, Fraction(0)) + c * cp
                        if s:
                            lau[k] = s
                        else:
                            lau.pop(k, None)
            return not lau
        return not A and not B

    # -- numerics -------------------------------------------------------

    def eval(self, s: float) -> float:
        total = 0.0
        for (a, b), c in self.terms.items():
            total += float(c) * s ** a * float(ktilde(float(self.gamma0 + b), s))
        return total

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if not self.terms:
            return "RadialLadder(0)"
        bits = [f"{c}*s^{a}*Kt[{self.gamma0 + b}]"
                for (a, b), c in sorted(self.terms.items())]
        return " + ".join(bits)


def _elementary_laurent(order: Fraction) -> dict[int, Fraction]:
    """P_m with ktilde_{m+1/2}(s) = sqrt(pi) e^{-s} P_m(1/s), as {power_of_1/s: coeff}.

    P_{-1} = 1/2, P_0 = 1/s, and P_{m+1} = (4/s^2)(P_{m-1} + (m+1/2) P_m),
    run downwards via P_{m-1} = (s^2/4) P_{m+1} - (m+1/2) P_m.
    """
    m2 = order - Fraction(1, 2)
    if m2.denominator != 1:
        raise ValueError("not a half-integer order")
    m = int(m2)
    lo: dict[int, Fraction] = {0: Fraction(1, 2)}   # P_{-1}
    hi: dict[int, Fraction] = {1: Fraction(1)}      # P_0
    if m == -1:
        return lo
    if m == 0:
        return hi
    def comb(d1, c1, d2, c2):
        out: dict[int, Fraction] = {}
        for d, cc in ((d1, c1), (d2, c2)):
            for p, v in d.items():
                s = out.get(p, Fraction(0)) + cc * v
                if s:
                    out[p] = s
                else:
                    out.pop(p, None)
        return out
    if m > 0:
        j = 0
        while j < m:
            # P_{j+1} = 4 w^2 (P_{j-1} + (j+1/2) P_j), w = 1/s
            new = comb({p + 2: v for p, v in lo.items()}, Fraction(4),
                       {p + 2: v for p, v in hi.items()}, 4 * (Fraction(2 * j + 1, 2)))
            lo, hi = hi, new
            j += 1
        return hi
    j = -1
    while j > m:
        # P_{j-1} = (1/4) w^{-2} P_{j+1} - (j+1/2) P_j
        new = comb({p - 2: v for p, v in hi.items()}, Fraction(1, 4),
                   lo, -Fraction(2 * j + 1, 2))
        lo, hi = new, lo
        j -= 1
    return lo


def elementary_profile(order: Fraction) -> dict[int, Fraction]:
    """Public wrapper: ktilde_order(s) = sqrt(pi) e^{-s} sum_p c_p s^{-p}."""
    return dict(_elementary_laurent(as_fraction(order)))


def bessel_ode_apply(alpha, f: RadialLadder) -> RadialLadder:
    """B_alpha f = s^{-2}(theta^2 + 2 alpha theta) f - f."""
    alpha = as_fraction(alpha)
    th = f.theta()
    return (th.theta() + th.scale(2 * alpha)).mul_power(-2) - f


def dtilde_apply(alpha, beta, f: RadialLadder) -> RadialLadder:
    """Dtilde_{alpha,beta} f, via the normal-ordered form

    s^{-2} Q2(theta) Q1(theta) - [Q2(theta+2) + Q1(theta)] + s^2,
    Q2(X) = (X+alpha+beta)(X+alpha),  Q1(X) = X(X+beta).
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)

    def q1(g: RadialLadder, shift=0) -> RadialLadder:
        return g.theta_shifted(beta + shift).theta_shifted(shift)

    def q2(g: RadialLadder, shift=0) -> RadialLadder:
        return g.theta_shifted(alpha + shift).theta_shifted(alpha + beta + shift)

    out = q2(q1(f)).mul_power(-2)
    out = out - q2(f, 2) - q1(f)
    out = out + f.mul_power(2)
    return out


def dtilde_eigenvalue(alpha, j: int) -> Fraction:
    return Fraction(4) * j * (j + as_fraction(alpha) + 1)


def _rising(a: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


def lambda_hat_profiles(alpha, beta, jmax: int) -> list[RadialLadder]:
    """Exact Gamma(alpha/2+1)-normalized eigenprofiles Lambda^_j, j = 0..jmax.

    Lambda^_j is the coefficient of t^j in

        (1-t)^{-(alpha+beta+2)/2} * [Gamma(alpha/2+1) itilde_{alpha/2}](st/(1-t))
                                  * ktilde_{beta/2}(s + st/(1-t))

    assembled as a finite triple sum; satisfies
    Dtilde_{alpha,beta} Lambda^_j = 4j(j+alpha+1) Lambda^_j and
    Lambda^_0 = ktilde_{beta/2}.
    """
    alpha = as_fraction(alpha)
    beta = as_fraction(beta)
    c0 = (alpha + beta + 2) / 2
    base = beta / 2

    derivs = [RadialLadder.pure(base)]
    for _ in range(jmax):
        derivs.append(derivs[-1].deriv())

    out = []
    for j in range(jmax + 1):
        acc = RadialLadder(base)
        for n in range(j // 2 + 1):
            coef_n = Fraction(1, 4 ** n) / _rising(Fraction(1), n) / _rising(alpha / 2 + 1, n)
            for q in range(j - 2 * n + 1):
                m0 = j - 2 * n - q
                coef = coef_n / _rising(Fraction(1), q) * _rising(c0 + 2 * n + q, m0) / _rising(Fraction(1), m0)
                acc = acc + derivs[q].mul_power(2 * n + q).scale(coef)
        out.append(acc)
    return out
