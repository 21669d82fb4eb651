"""Exact scalar types used by the symbolic layers.

Everything downstream that claims ``mode="exact"`` computes over one of
these coefficient rings (or plain :class:`fractions.Fraction`):

* :class:`CQ` -- Gaussian rationals ``a + b*i``,
* :class:`PiScalar` -- the Laurent ring Q[pi, 1/pi] with Fraction
  coefficients, for identities where pi must cancel formally rather
  than numerically.

The polynomial engine is duck-typed over its coefficient ring; any of
``int``, ``Fraction``, ``CQ``, ``PiScalar`` work as long as they are not
mixed incoherently.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["CQ", "PiScalar", "I", "PI", "as_fraction"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


class CQ:
    """Gaussian rational: ``re + im*i`` with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):  # immutability keeps hashing honest
        raise AttributeError("CQ is immutable")

    @staticmethod
    def coerce(x) -> "CQ":
        if isinstance(x, CQ):
            return x
        return CQ(as_fraction(x))

    def __add__(self, other):
        o = CQ.coerce(other)
        return CQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = CQ.coerce(other)
        return CQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return CQ.coerce(other) - self

    def __neg__(self):
        return CQ(-self.re, -self.im)

    def __mul__(self, other):
        o = CQ.coerce(other)
        return CQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> "CQ":
        return CQ(self.re, -self.im)

    def __truediv__(self, other):
        o = CQ.coerce(other)
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero in CQ")
        return CQ((self.re * o.re + self.im * o.im) / n2,
                  (self.im * o.re - self.re * o.im) / n2)

    def __rtruediv__(self, other):
        return CQ.coerce(other) / self

    def __eq__(self, other):
        try:
            o = CQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return f"CQ({self.re})"
        return f"CQ({self.re}, {self.im})"


I = CQ(0, 1)


class PiScalar:
    """Element of Q[pi, 1/pi]: a finite sum ``sum_e c_e * pi**e``.

    Stored as ``{exponent: Fraction}`` with no zero values.  Supports the
    ring operations plus division by a single-term element, which is all
    the operator dictionaries need.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = as_fraction(c)
                if c:
                    t[int(e)] = c
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("PiScalar is immutable")

    @staticmethod
    def coerce(x) -> "PiScalar":
        if isinstance(x, PiScalar):
            return x
        return PiScalar({0: as_fraction(x)})

    @staticmethod
    def pi_power(e: int, coeff=1) -> "PiScalar":
        return PiScalar({e: coeff})

    def __add__(self, other):
        o = PiScalar.coerce(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            s = t.get(e, Fraction(0)) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return PiScalar(t)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-PiScalar.coerce(other))

    def __rsub__(self, other):
        return PiScalar.coerce(other) - self

    def __mul__(self, other):
        o = PiScalar.coerce(other)
        t: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                s = t.get(e, Fraction(0)) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return PiScalar(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = PiScalar.coerce(other)
        if len(o.terms) != 1:
            raise ZeroDivisionError("PiScalar division only by single-term elements")
        (e, c), = o.terms.items()
        return PiScalar({e1 - e: c1 / c for e1, c1 in self.terms.items()})

    def __eq__(self, other):
        try:
            o = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __float__(self):
        return float(sum(float(c) * math.pi ** e for e, c in self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "PiScalar(0)"
        parts = [f"{c}*pi^{e}" if e else f"{c}" for e, c in sorted(self.terms.items())]
        return "PiScalar(" + " + ".join(parts) + ")"


PI = PiScalar.pi_power(1)
