"""Sparse multivariate polynomials over an exact coefficient ring.

Terms are ``{exponent_tuple: coeff}``; zero coefficients are never
stored, so ``not p.terms`` is the zero test.  The coefficient ring is
duck-typed: Fraction, CQ and PiScalar all work (don't mix them in one
polynomial).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Poly"]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[tuple(mono)] = c

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def const(nvars: int, c) -> "Poly":
        p = Poly(nvars)
        if c:
            p.terms[(0,) * nvars] = c
        return p

    @staticmethod
    def var(nvars: int, i: int, c=Fraction(1)) -> "Poly":
        mono = tuple(int(j == i) for j in range(nvars))
        return Poly(nvars, {mono: c})

    @staticmethod
    def monomial(nvars: int, mono, c=Fraction(1)) -> "Poly":
        return Poly(nvars, {tuple(mono): c})

    # -- ring ops ----------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("nvars mismatch")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return Poly(self.nvars)
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("nvars mismatch")
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = t.get(m, 0) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(self.nvars, t)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(self.nvars, Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        return self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus / evaluation ----------------------------------------

    def diff(self, i: int) -> "Poly":
        t = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mono = m[:i] + (e - 1,) + m[i + 1:]
                s = t.get(mono, 0) + e * c
                if s:
                    t[mono] = s
                else:
                    t.pop(mono, None)
        return Poly(self.nvars, t)

    def eval(self, point):
        """Evaluate at a point (entries numeric or ring elements)."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                for _ in range(e):
                    v = v * x
            total = total + v
        return total

    def subs(self, repl: list) -> "Poly":
        """Substitute variable i -> repl[i] (a Poly, shared nvars)."""
        if len(repl) != self.nvars:
            raise ValueError("need one replacement per variable")
        nv = repl[0].nvars
        out = Poly(nv)
        for m, c in self.terms.items():
            term = Poly.const(nv, c)
            for r, e in zip(repl, m):
                if e:
                    term = term * r ** e
            out = out + term
        return out

    def map_coeffs(self, f) -> "Poly":
        return Poly(self.nvars, {m: f(c) for m, c in self.terms.items()})

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coeff(self, mono):
        return self.terms.get(tuple(mono), 0)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            vars_ = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                             for i, e in enumerate(m) if e)
            bits.append(f"({c})" + ("*" + vars_ if vars_ else ""))
        return " + ".join(bits)
