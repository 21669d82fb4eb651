"""Numeric normalized Bessel functions.

``ktilde(a, x) = (x/2)**(-a) * K_a(x)`` solves the modified Bessel-type
equation ``f'' + (2a+1)/x f' - f = 0`` and is the radial profile all the
ground-state checks are built from; ``itilde`` is its regular companion
``sum_n (x/2)**(2n) / (n! Gamma(n+a+1))``.

Real orders/arguments go through scipy; the generating-function contour
extraction needs complex arguments and goes through mpmath.
"""

from __future__ import annotations

import numpy as np
from scipy import special as sp

import mpmath as mp

__all__ = ["ktilde", "itilde", "ktilde_complex", "itilde_complex", "genfun_complex"]


def ktilde(alpha: float, x):
    x = np.asarray(x, dtype=float)
    return (x / 2.0) ** (-alpha) * sp.kv(alpha, x)


def itilde(alpha: float, x):
    x = np.asarray(x, dtype=float)
    return (x / 2.0) ** (-alpha) * sp.iv(alpha, x)


def ktilde_complex(alpha: float, z) -> complex:
    z = mp.mpmathify(z)
    return complex((z / 2) ** (-alpha) * mp.besselk(alpha, z))


def itilde_complex(alpha: float, z) -> complex:
    """Entire-series form, safe at z = 0 and for complex z."""
    z = mp.mpmathify(z)
    if z == 0:
        return complex(1 / mp.gamma(alpha + 1))
    return complex((z / 2) ** (-alpha) * mp.besseli(alpha, z))


def genfun_complex(alpha: float, beta: float, t, s) -> complex:
    """G(t, s) = (1-t)^{-(alpha+beta+2)/2} itilde_{alpha/2}(st/(1-t)) ktilde_{beta/2}(s/(1-t)).

    The Taylor coefficients of t -> G(t, s) at t = 0 are the radial
    profiles of the discrete spectrum; see :mod:`minrep_lab.radial`.
    """
    t = mp.mpmathify(t)
    s = mp.mpmathify(s)
    one_minus = 1 - t
    pref = one_minus ** (-mp.mpf(alpha + beta + 2) / 2)
    it = itilde_complex(alpha / 2.0, s * t / one_minus)
    kt = ktilde_complex(beta / 2.0, s / one_minus)
    return complex(pref * it * kt)
