"""Independent realizations checked against the Bessel-operator picture.

Three dictionaries, each with its own exact machinery:

* the oscillator representation of sp(2k, R) on R^k (both parity sectors),
  reached from the symmetric-matrix cone by folding along y -> y y^t;
* the classical "fundamental differential operators" model for the
  bilinear-form families (signature (p, q)), compared slot by slot;
* the Fourier transform on the folded picture, with the multiplication /
  second-order-derivative exchange identities that characterize the unitary
  inversion, plus a direct numeric check of those identities on the
  half-line.

All algebraic comparisons are exact; pi never gets a numeric value (it lives
in the Laurent ring Q[pi, 1/pi]) and i never appears explicitly because
functions are carried as (real, imaginary) pairs.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .algebras import constants
from .ambient import BesselEngine, ExpLinear
from .orbits import chart_pullback
from .polynomials import Poly
from .representation import BesselRep, CFn
from .scalars import PiScalar

__all__ = [
    "YGauss", "weil_even_defects", "weil_odd_defects", "sp_embed",
    "sp_embedding_failures", "fundamental_operator", "opq_defects",
    "ygauss_fourier", "fourier_exchange_defects", "half_power_defects",
    "rank_one_inversion_residual", "rank_one_minimal_constants",
]


# -- functions on R^k -------------------------------------------------------

class YGauss:
    """p(y) * exp(-c |y|^2) on R^k; coefficients may be PiScalar."""

    __slots__ = ("k", "c", "poly")

    def __init__(self, k: int, c: Fraction, poly: Poly):
        if poly.nvars != k:
            raise ValueError("wrong number of variables")
        self.k = k
        self.c = Fraction(c)
        self.poly = poly

    def zero_like(self) -> "YGauss":
        return YGauss(self.k, self.c, Poly.zero(self.k))

    def deriv(self, i: int) -> "YGauss":
        p = self.poly.diff(i) - 2 * self.c * Poly.var(self.k, i) * self.poly
        return YGauss(self.k, self.c, p)

    def mul_poly(self, q: Poly) -> "YGauss":
        return YGauss(self.k, self.c, self.poly * q)

    def scale(self, s) -> "YGauss":
        return YGauss(self.k, self.c, self.poly * s)

    def __add__(self, other: "YGauss") -> "YGauss":
        if not isinstance(other, YGauss):
            return NotImplemented
        if other.k != self.k or other.c != self.c:
            raise ValueError("different envelopes")
        return YGauss(self.k, self.c, self.poly + other.poly)

    def __sub__(self, other: "YGauss") -> "YGauss":
        return self + other.scale(-1)

    def is_zero(self, on_orbit: bool = True) -> bool:
        return not self.poly.terms

    def __repr__(self):
        return f"YGauss(c={self.c}, poly={self.poly!r})"


# -- the symplectic embedding ------------------------------------------------

def _side_length(V) -> int:
    fam = V.consts.family
    if fam == "R":
        return 1
    if fam == "Sym(k,R)":
        return V.consts.params[0]
    raise ValueError("the oscillator dictionary lives on the symmetric cones "
                     f"over R, not {fam!r}")


def _to_mat(V, coords):
    k = _side_length(V)
    if k == 1:
        return [[Fraction(coords[0])]]
    return V.to_matrix(coords)


def _structure_matrix(V, a):
    """The element of str(V) acting by x -> a x + x a^T, as a matrix on V."""
    k = _side_length(V)
    cols = []
    for s in range(V.n):
        m = _to_mat(V, [Fraction(1 if t == s else 0) for t in range(V.n)])
        img = la.mat_add(la.mat_mul(a, m), la.mat_mul(m, la.transpose(a)))
        cols.append(V.from_matrix(img) if k > 1 else [img[0][0]])
    return [[cols[s][t] for s in range(V.n)] for t in range(V.n)]


def _solve_exact(rows, rhs, nunk):
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    R, pivots = la.rref(aug)
    x = [Fraction(0)] * nunk
    for r, p in enumerate(pivots):
        if p == nunk:
            raise ValueError("inconsistent linear system")
        x[p] = R[r][nunk]
    for i, r in enumerate(rows):
        if sum(r[j] * x[j] for j in range(nunk)) != rhs[i]:
            raise ValueError("solution check failed")
    return x


def _gl_part(V, T):
    """Recover the k x k matrix a with T = (x -> a x + x a^T); exact and
    unique because only a = 0 acts trivially on the symmetric matrices."""
    k = _side_length(V)
    n = V.n
    rows, rhs = [], []
    basis_mats = [_to_mat(V, [Fraction(1 if t == s else 0) for t in range(n)])
                  for s in range(n)]
    for s in range(n):
        img = [T[t][s] for t in range(n)]
        m = basis_mats[s]
        for t in range(n):
            row = [Fraction(0)] * (k * k)
            # coordinate t of (a m + m a^T) as a linear form in entries of a
            for i in range(k):
                for j in range(k):
                    eij = [[Fraction(1 if (r == i and c == j) else 0)
                            for c in range(k)] for r in range(k)]
                    val = la.mat_add(la.mat_mul(eij, m),
                                     la.mat_mul(m, la.transpose(eij)))
                    coords = V.from_matrix(val) if k > 1 else [val[0][0]]
                    row[i * k + j] = coords[t]
            rows.append(row)
            rhs.append(img[t])
    vec = _solve_exact(rows, rhs, k * k)
    return [[vec[i * k + j] for j in range(k)] for i in range(k)]


def sp_embed(V, X):
    """(u, T, v) -> the 2k x 2k matrix [[a, u],[v, -a^T]] of sp(2k, R)."""
    u, T, v = X
    a = _gl_part(V, T)
    ub, vb = _to_mat(V, u), _to_mat(V, v)
    k = _side_length(V)
    out = [[Fraction(0)] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        for j in range(k):
            out[i][j] = a[i][j]
            out[i][k + j] = ub[i][j]
            out[k + i][j] = vb[i][j]
            out[k + i][k + j] = -a[j][i]
    return out


def sp_embedding_failures(V) -> list:
    """Basis pairs where the embedding fails to be a Lie homomorphism."""
    from .conformal import ConformalAlgebra
    alg = ConformalAlgebra(V)
    mats = [sp_embed(V, alg.basis_element(i)) for i in range(alg.dim)]
    bad = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = la.mat_sub(la.mat_mul(mats[i], mats[j]),
                             la.mat_mul(mats[j], mats[i]))
            rhs = sp_embed(V, alg.bracket(alg.basis_element(i),
                                          alg.basis_element(j)))
            if lhs != rhs:
                bad.append((i, j))
    return bad


def _kappa(M):
    """Conjugation by [[0, sqrt(pi) 1],[-1/sqrt(pi), 0]]: by blocks,
    [[A, X],[Y, -A^T]] -> [[-A^T, -pi Y],[-X/pi, A]], over Q[pi, 1/pi]."""
    k = len(M) // 2
    pi = PiScalar.pi_power(1)
    inv = PiScalar.pi_power(-1)
    out = [[PiScalar.coerce(0)] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        for j in range(k):
            out[i][j] = PiScalar.coerce(-M[j][i])
            out[i][k + j] = -pi * M[k + i][j]
            out[k + i][j] = -inv * M[i][k + j]
            out[k + i][k + j] = PiScalar.coerce(M[i][j])
    return out


def dmu_apply(M, F: CFn) -> CFn:
    """The oscillator action of a 2k x 2k matrix on a (re, im) pair:

        [[A,0],[0,-A^T]] -> -sum A_ij y_j d_i - Tr(A)/2
        [[0,B],[0,0]]    -> (1/(4 pi i)) sum B_ij d_i d_j
        [[0,0],[C,0]]    -> -pi i sum C_ij y_i y_j
    """
    k = len(M) // 2
    A = [[M[i][j] for j in range(k)] for i in range(k)]
    B = [[M[i][k + j] for j in range(k)] for i in range(k)]
    C = [[M[k + i][j] for j in range(k)] for i in range(k)]
    inv4 = PiScalar.pi_power(-1, Fraction(-1, 4))
    pi = PiScalar.pi_power(1)

    def real_part(f):
        # -sum A_ij y_j d_i f - (TrA/2) f
        out = f.zero_like()
        for i in range(k):
            di = f.deriv(i)
            row = Poly.zero(k)
            for j in range(k):
                if A[i][j]:
                    row = row + Poly.var(k, j) * A[i][j]
            if row.terms:
                out = out + di.mul_poly(row).scale(-1)
        tr = sum((A[i][i] for i in range(k)), PiScalar.coerce(0))
        if tr:
            out = out + f.scale(tr * Fraction(-1, 2))
        return out

    def imag_part(f):
        # (-1/4pi) sum B d d f  +  (-pi) sum C y y f   [times i]
        out = f.zero_like()
        for i in range(k):
            for j in range(k):
                if B[i][j]:
                    out = out + f.deriv(i).deriv(j).scale(inv4 * B[i][j])
        quad = Poly.zero(k)
        for i in range(k):
            for j in range(k):
                if C[i][j]:
                    quad = quad + Poly.var(k, i) * Poly.var(k, j) * C[i][j]
        if quad.terms:
            out = out + f.mul_poly(quad).scale(-pi)
        return out

    re_out, im_out = None, None
    if F.re is not None:
        re_out = real_part(F.re)
        im_out = imag_part(F.re)
    if F.im is not None:
        t = real_part(F.im)
        im_out = t if im_out is None else im_out + t
        t = imag_part(F.im).scale(-1)
        re_out = t if re_out is None else re_out + t
    return CFn(re_out, im_out)


# -- folding the cone onto R^k ----------------------------------------------

def _fold_poly(V, p: Poly) -> Poly:
    if V.consts.family == "R":
        return p.subs([Poly.monomial(1, (2,))])
    return chart_pullback(p, V)


def fold_cone_function(V, f: ExpLinear) -> YGauss:
    """Pull p(x) e^{-c tr x} back along y -> y y^t to p(y y^t) e^{-c |y|^2}."""
    k = _side_length(V)
    E = BesselEngine(V)
    tr = E.trace_linear()
    # ell must be a multiple of the trace
    c = None
    for mono, coeff in f.ell.terms.items():
        base = tr.terms.get(mono)
        if base is None:
            raise ValueError("exponent is not a multiple of the trace")
        ratio = coeff / base
        if c is None:
            c = ratio
        elif c != ratio:
            raise ValueError("exponent is not a multiple of the trace")
    if set(tr.terms) != set(f.ell.terms):
        raise ValueError("exponent is not a multiple of the trace")
    return YGauss(k, c, _fold_poly(V, f.poly))


def _fold_cfn(V, F: CFn) -> CFn:
    return CFn(None if F.re is None else fold_cone_function(V, F.re),
               None if F.im is None else fold_cone_function(V, F.im))


def weil_even_defects(V, battery=None) -> list:
    """Indices of conformal basis elements X where folding dpi(X) fails to
    match the conjugated oscillator action on the even sector."""
    C = V.consts
    lam = Fraction(1, 2)   # the even oscillator point; equals lambda1 on Sym
    rep = BesselRep(V, lam)
    E = rep.engine
    n = V.n
    if battery is None:
        tr = E.trace_linear()
        polys = [Poly.const(n, 1), Poly.var(n, 0),
                 Poly.var(n, n - 1) * Poly.var(n, 0) + 2]
        battery = [ExpLinear(E, tr, p) for p in polys]
    bad = []
    for idx in range(rep.alg.dim):
        X = rep.alg.basis_element(idx)
        M = _kappa(sp_embed(V, X))
        for psi in battery:
            lhs = _fold_cfn(V, rep.apply(X, CFn.real(psi)))
            rhs = dmu_apply(M, CFn.real(fold_cone_function(V, psi)))
            if not (lhs - rhs).is_zero():
                bad.append(idx)
                break
    return bad


def weil_odd_defects(V) -> list:
    """The odd sector: on phi_u = (u . y) e^{-|y|^2},

        action of (v, 0, -v):  i ( tr(v)/2 phi_u + phi_{v u} )
        action of (0, T, 0), T skew:  phi_{a u}

    Returns the (slot, index) pairs that fail."""
    k = _side_length(V)
    n = V.n
    bad = []

    def phi(w):
        lin = Poly.zero(k)
        for i in range(k):
            if w[i]:
                lin = lin + Poly.var(k, i) * w[i]
        return YGauss(k, Fraction(1), lin)

    for s in range(n):
        e_s = [Fraction(1 if t == s else 0) for t in range(n)]
        X = (e_s, la.zeros(n, n), [-c for c in e_s])   # theta = id here
        M = _kappa(sp_embed(V, X))
        vmat = _to_mat(V, e_s)
        trv = la.trace(vmat)
        for i in range(k):
            u = [Fraction(1 if t == i else 0) for t in range(k)]
            lhs = dmu_apply(M, CFn.real(phi(u)))
            vu = la.mat_vec(vmat, u)
            rhs = CFn(im=phi(u).scale(Fraction(trv, 2)) + phi(vu))
            if not (lhs - rhs).is_zero():
                bad.append(("v", s, i))
    if k >= 2:
        for (r, s) in [(i, j) for i in range(k) for j in range(i + 1, k)]:
            a = la.zeros(k, k)
            a[r][s] = Fraction(1)
            a[s][r] = Fraction(-1)
            T = _structure_matrix(V, a)
            X = ([Fraction(0)] * n, T, [Fraction(0)] * n)
            M = _kappa(sp_embed(V, X))
            for i in range(k):
                u = [Fraction(1 if t == i else 0) for t in range(k)]
                lhs = dmu_apply(M, CFn.real(phi(u)))
                rhs = CFn(re=phi(la.mat_vec(a, u)))
                if not (lhs - rhs).is_zero():
                    bad.append(("T", (r, s), i))
    return bad


# -- the signature (p, q) fundamental operators ------------------------------

def _pq_signs(C):
    p, q = C.params
    return [Fraction(1)] * p + [Fraction(-1)] * q


def fundamental_operator(C, j: int, f: Poly) -> Poly:
    """P_j f = eps_j x_j Box f - (2E + n - 2) d_j f on R^{p+q}, with Box the
    signature Laplacian and E the Euler operator."""
    n = C.n
    eps = _pq_signs(C)
    box = Poly.zero(n)
    for m in range(n):
        box = box + eps[m] * f.diff(m).diff(m)
    dj = f.diff(j)
    euler = Poly.zero(n)
    for m in range(n):
        euler = euler + Poly.var(n, m) * dj.diff(m)
    return eps[j] * Poly.var(n, j) * box - (2 * euler + (n - 2) * dj)


def opq_defects(p: int, q: int, battery=None) -> list:
    """Slot-by-slot comparison of the degenerate-series model of the
    orthogonal group at lambda1 with the Bessel realization; exact.

    Returns the failing (slot, index) pairs over the battery."""
    C = constants("R(p,q)", p, q)
    rep = BesselRep.minimal(C)
    V, E, n = rep.V, rep.engine, C.n
    if battery is None:
        import random
        rng = random.Random(17)
        battery = []
        for _ in range(4):
            poly = Poly.const(n, 1)
            for _ in range(5):
                mono = [0] * n
                for _ in range(rng.randint(1, 3)):
                    mono[rng.randrange(n)] += 1
                poly = poly + Poly.monomial(n, tuple(mono),
                                            Fraction(rng.randint(-3, 3)))
            battery.append(poly)
    bad = []
    # u-slot: the trace-form pairing against the involuted vector collapses
    # to twice the euclidean pairing, so multiplication is by 2 x_a
    for a in range(n):
        u = [Fraction(1 if b == a else 0) for b in range(n)]
        if E.inner_linear(u) != 2 * Poly.var(n, a):
            bad.append(("u", a))
    # v-slot: i/2 times the fundamental operator
    for j in range(n):
        u = [Fraction(1 if b == j else 0) for b in range(n)]
        for f in battery:
            lhs = E.bessel_tau(E.poly_fn(f), rep.lam, u).poly
            rhs = Fraction(-1, 2) * fundamental_operator(C, j, f)
            if lhs != rhs:
                bad.append(("v", j))
                break
    # T-slot: derivation along T* x plus the lambda1-shifted trace
    for i, T in enumerate(rep.alg.l_basis):
        Ts = V.inner_adjoint(T)
        shift = Fraction(C.lambda1, n) * la.trace(Ts)
        for f in battery:
            lhs = rep._str_op(T, E.poly_fn(f)).poly
            direct = Poly.zero(n)
            for g in range(n):
                row = Poly.zero(n)
                for d in range(n):
                    if Ts[g][d]:
                        row = row + Poly.var(n, d) * Ts[g][d]
                direct = direct + f.diff(g) * row
            rhs = direct + shift * f
            if lhs != rhs:
                bad.append(("T", i))
                break
    return bad


# -- Fourier exchange on the folded picture -----------------------------------

def ygauss_fourier(F: CFn, k: int) -> CFn:
    """The transform with kernel pi^{-k/2} exp(-2 i y.xi) on p(y) e^{-|y|^2}:
    the Gaussian is a fixed point and y_j f maps to (i/2) d_j of the image."""
    cache: dict = {}

    def mono_image(m) -> CFn:
        if m in cache:
            return cache[m]
        tot = sum(m)
        if tot == 0:
            out = CFn.real(YGauss(k, Fraction(1), Poly.const(k, 1)))
        else:
            j = next(i for i in range(k) if m[i])
            rest = tuple(c - (1 if i == j else 0) for i, c in enumerate(m))
            img = mono_image(rest)
            # multiply the derivative by i/2: (re, im) -> (-im/2, re/2)
            dre = None if img.re is None else img.re.deriv(j)
            dim = None if img.im is None else img.im.deriv(j)
            out = CFn(None if dim is None else dim.scale(Fraction(-1, 2)),
                      None if dre is None else dre.scale(Fraction(1, 2)))
        cache[m] = out
        return out

    def one(g: YGauss) -> CFn:
        if g.c != 1:
            raise ValueError("the exact transform is tabulated at c = 1")
        acc = CFn(None, None)
        for m, coeff in g.poly.terms.items():
            acc = acc + mono_image(m).scale(coeff)
        return acc

    out = CFn(None, None)
    if F.re is not None:
        out = out + one(F.re)
    if F.im is not None:
        t = one(F.im)
        out = out + CFn(None if t.im is None else t.im.scale(-1), t.re)
    return out


def fourier_exchange_defects(V, battery=None) -> list:
    """The two unitary-inversion exchange identities on the folded picture:

        T(q_w f) = -(1/4) dd_w T(f)      and      T((1/4) dd_w f) = -q_w T(f)

    for every symmetric w, with q_w = sum w_ij y_i y_j and dd_w the matching
    second-order derivative; exact on polynomial Gaussians."""
    k = _side_length(V)
    n = V.n
    if battery is None:
        battery = [Poly.const(k, 1), Poly.var(k, 0),
                   Poly.var(k, 0) * Poly.var(k, k - 1) + 1]
    bad = []
    for s in range(n):
        e_s = [Fraction(1 if t == s else 0) for t in range(n)]
        w = _to_mat(V, e_s)
        quad = Poly.zero(k)
        for i in range(k):
            for j in range(k):
                if w[i][j]:
                    quad = quad + Poly.var(k, i) * Poly.var(k, j) * w[i][j]
        for p in battery:
            f = YGauss(k, Fraction(1), p)

            def ddw(F: CFn) -> CFn:
                def one(g):
                    if g is None:
                        return None
                    acc = g.zero_like()
                    for i in range(k):
                        for j in range(k):
                            if w[i][j]:
                                acc = acc + g.deriv(i).deriv(j).scale(w[i][j])
                    return acc
                return CFn(one(F.re), one(F.im))

            tf = ygauss_fourier(CFn.real(f), k)
            lhs1 = ygauss_fourier(CFn.real(f.mul_poly(quad)), k)
            rhs1 = ddw(tf).scale(Fraction(-1, 4))
            if not (lhs1 - rhs1).is_zero():
                bad.append(("mult->deriv", s))
            lhs2 = ygauss_fourier(ddw(CFn.real(f)).scale(Fraction(1, 4)), k)
            rhs2 = CFn(None if tf.re is None else tf.re.mul_poly(quad),
                       None if tf.im is None else tf.im.mul_poly(quad)).scale(-1)
            if not (lhs2 - rhs2).is_zero():
                bad.append(("deriv->mult", s))
    return bad


def half_power_defects(V, trials: int = 12, seed: int = 5) -> list:
    """Rank-one squares satisfy P(w) x = (x|w) w with w = u u^T, which is the
    algebraic heart of the half-power annihilation on the smallest cone: it
    forces the Bessel operator at the bottom parameter to kill (x|w)^{1/2}.
    Checked as a polynomial identity in x for a battery of rational u."""
    import random
    rng = random.Random(seed)
    k = _side_length(V)
    n = V.n
    bad = []
    for t in range(trials):
        u = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)]
        if not any(u):
            u[0] = Fraction(1)
        mat = [[u[i] * u[j] for j in range(k)] for i in range(k)]
        w = V.from_matrix(mat) if k > 1 else [mat[0][0]]
        P = V.quad_rep(w)
        E = BesselEngine(V)
        pairing = E.inner_linear(w)
        for g in range(n):
            lhs = Poly.zero(n)
            for d in range(n):
                if P[g][d]:
                    lhs = lhs + Poly.var(n, d) * P[g][d]
            rhs = pairing * w[g]
            if lhs != rhs:
                bad.append((t, g))
                break
    return bad


def rank_one_minimal_constants():
    """Kernel data of the half-line unitary inversion at the even oscillator
    point: K(s, t) = pi^{-1/2} cos(2 sqrt(st)) against t^{-1/2} dt."""
    return {"lam": 0.5, "kernel": "pi^(-1/2) cos(2 sqrt(s t))"}


def rank_one_inversion_residual(xs=None, dps: int = 25) -> float:
    """Direct numeric check, on the half-line at lam = 1/2, that the unitary
    inversion exchanges multiplication by the variable with minus the Bessel
    operator, in both directions:

        T(t psi) = -B T(psi)    and    T(B psi) = -s T(psi),

    where B f = t f'' + (1/2) f' and T has the cosine kernel above."""
    import mpmath as mp
    mp.mp.dps = dps
    lam = mp.mpf(1) / 2
    if xs is None:
        xs = [mp.mpf(v) / 10 for v in (3, 8, 17)]
    batteries = [
        (lambda t: mp.e ** (-t),
         lambda t: -mp.e ** (-t),
         lambda t: mp.e ** (-t)),
        (lambda t: (1 + t) * mp.e ** (-2 * t),
         lambda t: (-1 - 2 * t) * mp.e ** (-2 * t),
         lambda t: 4 * t * mp.e ** (-2 * t)),
    ]

    def kern(s, t):
        return mp.cos(2 * mp.sqrt(s * t)) / mp.sqrt(mp.pi)

    def trans(g, s):
        return mp.quad(lambda t: kern(s, t) * g(t) * t ** (lam - 1),
                       [0, 1, 10, mp.inf])

    # derivatives of the transform in s, via differentiated kernels
    def trans_d(g, s):
        def dk(t):
            return -mp.sin(2 * mp.sqrt(s * t)) * mp.sqrt(t / s) / mp.sqrt(mp.pi)
        return mp.quad(lambda t: dk(t) * g(t) * t ** (lam - 1),
                       [0, 1, 10, mp.inf])

    def trans_d2(g, s):
        def d2k(t):
            rt = mp.sqrt(s * t)
            return (mp.sin(2 * rt) * mp.sqrt(t) / (2 * s ** mp.mpf(1.5))
                    - t * mp.cos(2 * rt) / s) / mp.sqrt(mp.pi)
        return mp.quad(lambda t: d2k(t) * g(t) * t ** (lam - 1),
                       [0, 1, 10, mp.inf])

    worst = mp.mpf(0)
    for f, df, d2f in batteries:
        for s in xs:
            tf = trans(f, s)
            # direction 1: T(t psi)(s) + s T''(s) + 1/2 T'(s) = 0
            lhs = trans(lambda t: t * f(t), s)
            rhs = -(s * trans_d2(f, s) + trans_d(f, s) / 2)
            worst = max(worst, abs(lhs - rhs))
            # direction 2: T(B psi)(s) + s T(psi)(s) = 0
            lhs2 = trans(lambda t: t * d2f(t) + df(t) / 2, s)
            worst = max(worst, abs(lhs2 + s * tf))
    return float(worst)
