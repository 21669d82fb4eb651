"""Simple real Jordan algebras with simple involution-fixed part.

Two layers:

* :class:`Constants` / :func:`constants` -- the classification registry.
  Eighteen isomorphism families are supported; each row carries the
  structure constants (n, r, d, e) of the algebra, those of the fixed
  part under the Cartan involution (n0, r0, d0), flags, and the Lie
  algebra bookkeeping for the associated conformal groups.  Derived
  parameters (nu, mu, lambda1, the measure parameter set) are computed
  from the row.

* :class:`JordanAlgebra` subclasses -- concrete coordinate arithmetic
  for the families the verification engine can actually compute in:
  the real line, symmetric matrices, full matrix algebras, and the
  bilinear-form algebras R^{p,q} (including the anisotropic q = 0
  case).  Everything is exact over Fraction.

Registry rows without coordinate arithmetic raise
:class:`UnsupportedFamilyError` from :meth:`Constants.algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg as la

__all__ = [
    "Constants", "constants", "family_names", "UnsupportedFamilyError",
    "JordanAlgebra", "RealLine", "SymReal", "MatReal", "BilinearFormAlgebra",
]


class UnsupportedFamilyError(NotImplementedError):
    """Registry row exists, but no coordinate model is implemented."""


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Constants:
    """One classification row plus derived representation parameters."""

    family: str
    params: tuple[int, ...]
    n: int
    r: int
    d: int
    e: int
    n0: int
    r0: int
    d0: int
    vplus: str
    euclidean: bool
    complex_form: bool = False      # a complex algebra viewed over R
    lie: dict = field(default_factory=dict, compare=False)

    # -- derived parameters ------------------------------------------------

    @property
    def nu(self) -> int:
        return min(self.d, 2 * self.d0) - self.d0 - self.e - 1

    @property
    def mu(self) -> Fraction:
        return Fraction(self.n, self.r0) + abs(Fraction(self.d0) - Fraction(self.d, 2)) - 2

    @property
    def lambda1(self) -> Fraction:
        return Fraction(self.r0 * self.d, 2 * self.r)

    def sigma(self, lam) -> Fraction:
        return Fraction(self.r, self.r0) * Fraction(lam)

    @property
    def split(self) -> bool:
        return self.e == 0

    @property
    def wallach_discrete(self) -> list[Fraction]:
        step = Fraction(self.r0 * self.d, 2 * self.r)
        return [j * step for j in range(self.r0)]

    @property
    def wallach_continuous_from(self) -> Fraction:
        """The measure parameter set is the discrete points together with
        the open half line above this value (all of (0, oo) when r0 = 1)."""
        if self.r0 == 1:
            return Fraction(0)
        return (self.r0 - 1) * Fraction(self.r0 * self.d, 2 * self.r)

    @property
    def orbit_dim(self) -> int:
        """Dimension of the minimal nonzero orbit of the structure group."""
        return self.e + 1 + (self.r0 - 1) * self.d

    def algebra(self) -> "JordanAlgebra":
        maker = _ALGEBRA_MAKERS.get(self.family)
        if maker is None:
            raise UnsupportedFamilyError(
                f"no coordinate model for family {self.family!r}; "
                "registry data is available but arithmetic is not")
        return maker(self)

    def __str__(self):
        p = ",".join(map(str, self.params))
        return f"{self.family}[{p}]" if p else self.family


def _so(m: int) -> int:
    return m * (m - 1) // 2


def _row_real_line(_):
    return dict(n=1, r=1, d=0, e=0, n0=1, r0=1, d0=0, vplus="R", euclidean=True,
                lie=dict(g=("sl(2,R)", 3), k=("so(2)", 1),
                         l=("R", 1), kl=("0", 0)))


def _row_sym(k):
    if k < 2:
        raise ValueError("Sym(k,R) needs k >= 2")
    n = k * (k + 1) // 2
    return dict(n=n, r=k, d=1, e=0, n0=n, r0=k, d0=1, vplus="Sym(k,R)",
                euclidean=True,
                lie=dict(g=(f"sp({k},R)", k * (2 * k + 1)),
                         k=(f"su({k})+R", k * k),
                         l=(f"sl({k},R)+R", k * k),
                         kl=(f"so({k})", _so(k))))


def _row_herm_c(k):
    if k < 2:
        raise ValueError("Herm(k,C) needs k >= 2")
    return dict(n=k * k, r=k, d=2, e=0, n0=k * k, r0=k, d0=2, vplus="Herm(k,C)",
                euclidean=True,
                lie=dict(g=(f"su({k},{k})", 4 * k * k - 1),
                         k=(f"su({k})+su({k})+R", 2 * (k * k - 1) + 1),
                         l=(f"sl({k},C)+R", 2 * (k * k - 1) + 1),
                         kl=(f"su({k})", k * k - 1)))


def _row_herm_h(k):
    if k < 2:
        raise ValueError("Herm(k,H) needs k >= 2")
    n = k * (2 * k - 1)
    return dict(n=n, r=k, d=4, e=0, n0=n, r0=k, d0=4, vplus="Herm(k,H)",
                euclidean=True,
                lie=dict(g=(f"so*({4 * k})", 2 * k * (4 * k - 1)),
                         k=(f"su({2 * k})+R", 4 * k * k),
                         l=(f"su*({2 * k})+R", 4 * k * k),
                         kl=(f"sp({k})", k * (2 * k + 1))))


def _row_lorentz(k):
    # R^{1,k-1}: the euclidean rank-two family
    if k < 3:
        raise ValueError("R(1,k-1) needs k >= 3")
    q = k - 1
    return dict(n=k, r=2, d=k - 2, e=0, n0=k, r0=2, d0=k - 2, vplus="R(1,k-1)",
                euclidean=True,
                lie=dict(g=(f"so(2,{k})", (k + 2) * (k + 1) // 2),
                         k=(f"so({k})+R", _so(k) + 1),
                         l=(f"so(1,{q})+R", _so(k) + 1),
                         kl=(f"so({q})", _so(q))))


def _row_herm3_o(_):
    return dict(n=27, r=3, d=8, e=0, n0=27, r0=3, d0=8, vplus="Herm(3,O)",
                euclidean=True,
                lie=dict(g=("e7(-25)", 133), k=("e6+R", 79),
                         l=("e6(-26)+R", 79), kl=("f4", 52)))


def _row_mat(k):
    if k < 2:
        raise ValueError("M(k,R) needs k >= 2")
    return dict(n=k * k, r=k, d=2, e=0,
                n0=k * (k + 1) // 2, r0=k, d0=1, vplus="Sym(k,R)",
                euclidean=False,
                lie=dict(g=(f"sl({2 * k},R)", 4 * k * k - 1),
                         k=(f"so({2 * k})", _so(2 * k)),
                         l=(f"sl({k},R)+sl({k},R)+R", 2 * k * k - 1),
                         kl=(f"so({k})+so({k})", 2 * _so(k))))


def _row_skew(k):
    if k < 2:
        raise ValueError("Skew(2k,R) needs k >= 2")
    n = k * (2 * k - 1)
    return dict(n=n, r=k, d=4, e=0, n0=k * k, r0=k, d0=2, vplus="Herm(k,C)",
                euclidean=False,
                lie=dict(g=(f"so({2 * k},{2 * k})", 2 * k * (4 * k - 1)),
                         k=(f"so({2 * k})+so({2 * k})", 2 * _so(2 * k)),
                         l=(f"sl({2 * k},R)+R", 4 * k * k),
                         kl=(f"so({2 * k})", _so(2 * k))))


def _row_rpq(p, q):
    if p < 2 or q < 1:
        raise ValueError("R(p,q) needs p >= 2, q >= 1")
    n = p + q
    return dict(n=n, r=2, d=n - 2, e=0, n0=q + 1, r0=2, d0=q - 1, vplus="R(1,q)",
                euclidean=False,
                lie=dict(g=(f"so({p + 1},{q + 1})", _so(n + 2)),
                         k=(f"so({p + 1})+so({q + 1})", _so(p + 1) + _so(q + 1)),
                         l=(f"so({p},{q})+R", _so(n) + 1),
                         kl=(f"so({p})+so({q})", _so(p) + _so(q))))


def _row_herm3_os(_):
    return dict(n=27, r=3, d=8, e=0, n0=15, r0=3, d0=4, vplus="Herm(3,H)",
                euclidean=False,
                lie=dict(g=("e7(7)", 133), k=("su(8)", 63),
                         l=("e6(6)+R", 79), kl=("sp(4)", 36)))


def _row_sym_c(k):
    if k < 2:
        raise ValueError("Sym(k,C) needs k >= 2")
    return dict(n=k * (k + 1), r=2 * k, d=2, e=1,
                n0=k * (k + 1) // 2, r0=k, d0=1, vplus="Sym(k,R)",
                euclidean=False, complex_form=True,
                lie=dict(g=(f"sp({k},C)", 2 * k * (2 * k + 1)),
                         k=(f"sp({k})", k * (2 * k + 1)),
                         l=(f"sl({k},C)+C", 2 * k * k),
                         kl=(f"su({k})+R", k * k)))


def _row_mat_c(k):
    if k < 2:
        raise ValueError("M(k,C) needs k >= 2")
    return dict(n=2 * k * k, r=2 * k, d=4, e=1,
                n0=k * k, r0=k, d0=2, vplus="Herm(k,C)",
                euclidean=False, complex_form=True,
                lie=dict(g=(f"sl({2 * k},C)", 2 * (4 * k * k - 1)),
                         k=(f"su({2 * k})", 4 * k * k - 1),
                         l=(f"sl({k},C)+sl({k},C)+C", 4 * k * k - 2),
                         kl=(f"su({k})+su({k})+R", 2 * k * k - 1)))


def _row_skew_c(k):
    if k < 2:
        raise ValueError("Skew(2k,C) needs k >= 2")
    return dict(n=2 * k * (2 * k - 1), r=2 * k, d=8, e=1,
                n0=k * (2 * k - 1), r0=k, d0=4, vplus="Herm(k,H)",
                euclidean=False, complex_form=True,
                lie=dict(g=(f"so({4 * k},C)", 4 * k * (4 * k - 1)),
                         k=(f"so({4 * k})", 2 * k * (4 * k - 1)),
                         l=(f"sl({2 * k},C)+C", 8 * k * k),
                         kl=(f"su({2 * k})+R", 4 * k * k)))


def _row_c_k(k):
    if k < 3:
        raise ValueError("C^k needs k >= 3")
    return dict(n=2 * k, r=4, d=2 * (k - 2), e=1,
                n0=k, r0=2, d0=k - 2, vplus="R(1,k-1)",
                euclidean=False, complex_form=True,
                lie=dict(g=(f"so({k + 2},C)", (k + 2) * (k + 1)),
                         k=(f"so({k + 2})", _so(k + 2)),
                         l=(f"so({k},C)+C", k * (k - 1) + 2),
                         kl=(f"so({k})+R", _so(k) + 1)))


def _row_herm3_oc(_):
    return dict(n=54, r=6, d=16, e=1, n0=27, r0=3, d0=8, vplus="Herm(3,O)",
                euclidean=False, complex_form=True,
                lie=dict(g=("e7(C)", 266), k=("e7", 133),
                         l=("e6(C)+C", 158), kl=("e6+R", 79)))


def _row_sym2k_c_mat_h(k):
    if k < 2:
        raise ValueError("Sym(2k,C)&M(k,H) needs k >= 2")
    return dict(n=k * (2 * k + 1), r=2 * k, d=4, e=2,
                n0=k * k, r0=k, d0=2, vplus="Herm(k,C)",
                euclidean=False,
                lie=dict(g=(f"sp({k},{k})", 2 * k * (4 * k + 1)),
                         k=(f"sp({k})+sp({k})", 2 * k * (2 * k + 1)),
                         l=(f"su*({2 * k})+R", 4 * k * k),
                         kl=(f"sp({k})", k * (2 * k + 1))))


def _row_mat_h(k):
    if k < 2:
        raise ValueError("M(k,H) needs k >= 2")
    return dict(n=4 * k * k, r=2 * k, d=8, e=3,
                n0=k * (2 * k - 1), r0=k, d0=4, vplus="Herm(k,H)",
                euclidean=False,
                lie=dict(g=(f"su*({4 * k})", 16 * k * k - 1),
                         k=(f"sp({2 * k})", 2 * k * (4 * k + 1)),
                         l=(f"su*({2 * k})+su*({2 * k})+R", 8 * k * k - 1),
                         kl=(f"sp({k})+sp({k})", 2 * k * (2 * k + 1))))


def _row_rk0(k):
    if k < 2:
        raise ValueError("R(k,0) needs k >= 2")
    return dict(n=k, r=2, d=0, e=k - 1, n0=1, r0=1, d0=0, vplus="R",
                euclidean=False,
                lie=dict(g=(f"so({k + 1},1)", (k + 2) * (k + 1) // 2),
                         k=(f"so({k + 1})", _so(k + 1)),
                         l=(f"so({k})+R", _so(k) + 1),
                         kl=(f"so({k})", _so(k))))


_ROWS = {
    "R": (_row_real_line, 0),
    "Sym(k,R)": (_row_sym, 1),
    "Herm(k,C)": (_row_herm_c, 1),
    "Herm(k,H)": (_row_herm_h, 1),
    "R(1,k-1)": (_row_lorentz, 1),
    "Herm(3,O)": (_row_herm3_o, 0),
    "M(k,R)": (_row_mat, 1),
    "Skew(2k,R)": (_row_skew, 1),
    "R(p,q)": (_row_rpq, 2),
    "Herm(3,Os)": (_row_herm3_os, 0),
    "Sym(k,C)": (_row_sym_c, 1),
    "M(k,C)": (_row_mat_c, 1),
    "Skew(2k,C)": (_row_skew_c, 1),
    "C^k": (_row_c_k, 1),
    "Herm(3,O)xC": (_row_herm3_oc, 0),
    "Sym(2k,C)&M(k,H)": (_row_sym2k_c_mat_h, 1),
    "M(k,H)": (_row_mat_h, 1),
    "R(k,0)": (_row_rk0, 1),
}


def family_names() -> list[str]:
    return list(_ROWS)


def constants(family: str, *params: int) -> Constants:
    """Look up a registry row, e.g. ``constants("Sym(k,R)", 3)`` or
    ``constants("R(p,q)", 2, 3)``."""
    if family not in _ROWS:
        raise KeyError(f"unknown family {family!r}; known: {sorted(_ROWS)}")
    maker, nparams = _ROWS[family]
    if len(params) != nparams:
        raise ValueError(f"{family} takes {nparams} parameter(s), got {len(params)}")
    row = maker(None) if nparams == 0 else maker(*params)
    return Constants(family=family, params=tuple(params), **row)


# ---------------------------------------------------------------------------
# concrete arithmetic
# ---------------------------------------------------------------------------

def _FV(x):
    return [Fraction(v) for v in x]


class JordanAlgebra:
    """Coordinate model of a Jordan algebra over Fraction vectors.

    Subclasses provide ``mul``, ``unit``, ``trace``, ``determinant``,
    ``theta_matrix`` and ``frame`` (a maximal system of orthogonal
    primitive idempotents inside the involution-fixed part); everything
    else (multiplication operators, quadratic maps, trace form, the
    Peirce decomposition) is derived here.
    """

    def __init__(self, consts: Constants):
        self.consts = consts
        self.n = consts.n

    # subclass API ---------------------------------------------------------

    def mul(self, x, y):  # pragma: no cover - abstract
        raise NotImplementedError

    def unit(self):
        raise NotImplementedError

    def trace(self, x) -> Fraction:
        raise NotImplementedError

    def determinant(self, x) -> Fraction:
        raise NotImplementedError

    def theta_matrix(self):
        raise NotImplementedError

    def frame(self) -> list:
        raise NotImplementedError

    # derived --------------------------------------------------------------

    def basis(self):
        return [[Fraction(int(i == j)) for j in range(self.n)] for i in range(self.n)]

    def lmat(self, x):
        """Matrix of left multiplication by x."""
        cols = [self.mul(x, e) for e in self.basis()]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    @cached_property
    def tau_gram(self):
        """Gram matrix of the trace form tau(x, y) = trace(x o y)."""
        b = self.basis()
        return [[self.trace(self.mul(b[i], b[j])) for j in range(self.n)]
                for i in range(self.n)]

    def tau(self, x, y) -> Fraction:
        return self.trace(self.mul(x, y))

    @cached_property
    def inner_gram(self):
        th = self.theta_matrix()
        b = self.basis()
        return [[self.tau(b[i], la.mat_vec(th, b[j])) for j in range(self.n)]
                for i in range(self.n)]

    def inner(self, x, y) -> Fraction:
        return self.tau(x, la.mat_vec(self.theta_matrix(), y))

    @cached_property
    def tau_gram_inv(self):
        return la.inverse(self.tau_gram)

    def dual_basis(self):
        """Basis dual to the coordinate basis w.r.t. tau."""
        inv = self.tau_gram_inv
        return [[inv[i][j] for i in range(self.n)] for j in range(self.n)]

    def quad_rep(self, x):
        """P(x) = 2 L(x)^2 - L(x o x)."""
        lx = self.lmat(x)
        return la.mat_sub(la.mat_scale(2, la.mat_mul(lx, lx)),
                          self.lmat(self.mul(x, x)))

    def quad_rep2(self, x, y):
        """P(x, y) = L(x)L(y) + L(y)L(x) - L(x o y)."""
        lx, ly = self.lmat(x), self.lmat(y)
        return la.mat_sub(la.mat_add(la.mat_mul(lx, ly), la.mat_mul(ly, lx)),
                          self.lmat(self.mul(x, y)))

    def box(self, u, v):
        """u box v = L(u o v) + [L(u), L(v)]."""
        lu, lv = self.lmat(u), self.lmat(v)
        return la.mat_add(self.lmat(self.mul(u, v)),
                          la.mat_sub(la.mat_mul(lu, lv), la.mat_mul(lv, lu)))

    def tau_adjoint(self, t):
        """Adjoint w.r.t. the trace form."""
        g = self.tau_gram
        return la.mat_mul(self.tau_gram_inv, la.mat_mul(la.transpose(t), g))

    def inner_adjoint(self, t):
        g = self.inner_gram
        return la.mat_mul(la.inverse(g), la.mat_mul(la.transpose(t), g))

    def peirce_space(self, weights) -> list:
        """Joint eigenspace { x : L(c_i) x = weights[i] * x } of the frame."""
        frame = self.frame()
        rows = []
        for c, w in zip(frame, weights):
            lc = self.lmat(c)
            w = Fraction(w)
            for i in range(self.n):
                row = lc[i][:]
                row[i] -= w
                rows.append(row)
        return la.nullspace(rows)

    def peirce_profile(self):
        """Derive (r0, e, d, n0, d0) from the frame by exact eigen-splitting.

        Independent of the registry row; tests compare the two.
        """
        r0 = len(self.frame())
        v11 = self.peirce_space([Fraction(1)] + [Fraction(0)] * (r0 - 1))
        e = len(v11) - 1
        if r0 >= 2:
            w = [Fraction(1, 2), Fraction(1, 2)] + [Fraction(0)] * (r0 - 2)
            v12 = self.peirce_space(w)
            d = len(v12)
        else:
            v12 = []
            d = 0
        th = self.theta_matrix()
        fixed_rows = [[th[i][j] - Fraction(int(i == j)) for j in range(self.n)]
                      for i in range(self.n)]
        n0 = len(la.nullspace(fixed_rows))
        d0 = 0
        if v12:
            # dim of the theta-fixed part of V_12
            stacked = [vec for vec in v12]
            coeff_rows = []
            dim = len(v12)
            for i in range(self.n):
                row = [sum((th[i][j] - Fraction(int(i == j))) * stacked[b][j]
                           for j in range(self.n)) for b in range(dim)]
                coeff_rows.append(row)
            d0 = len(la.nullspace(coeff_rows))
        return dict(r0=r0, e=e, d=d, n0=n0, d0=d0)

    # radial normalization: |x|^2 = (r/r0) * (x|x)
    def radial_sq_factor(self) -> Fraction:
        return Fraction(self.consts.r, self.consts.r0)

    @cached_property
    def bessel_tensor(self):
        """P(eb_a, eb_b) for the tau-dual basis eb, as an n x n array of
        matrices; the coefficient data of the second-order part of the
        Bessel operators."""
        dual = self.dual_basis()
        return [[self.quad_rep2(dual[a], dual[b]) for b in range(self.n)]
                for a in range(self.n)]


class RealLine(JordanAlgebra):
    def mul(self, x, y):
        return [x[0] * y[0]]

    def unit(self):
        return [Fraction(1)]

    def trace(self, x):
        return x[0]

    def determinant(self, x):
        return x[0]

    def theta_matrix(self):
        return la.identity(1)

    def frame(self):
        return [self.unit()]


class _MatrixCoords:
    """Index helpers shared by the matrix-shaped families."""

    @staticmethod
    def sym_index(k):
        pairs = [(i, i) for i in range(k)] + [(i, j) for i in range(k) for j in range(i + 1, k)]
        return {p: a for a, p in enumerate(pairs)}, pairs

    @staticmethod
    def full_index(k):
        pairs = [(i, j) for i in range(k) for j in range(k)]
        return {p: a for a, p in enumerate(pairs)}, pairs


class SymReal(JordanAlgebra):
    """Symmetric k x k matrices; coordinates are the diagonal entries
    followed by the strict upper triangle (basis E_ii and E_ij + E_ji)."""

    def __init__(self, consts: Constants):
        super().__init__(consts)
        self.k = consts.params[0]
        self.index, self.pairs = _MatrixCoords.sym_index(self.k)

    def to_matrix(self, x):
        k = self.k
        m = [[Fraction(0)] * k for _ in range(k)]
        for (i, j), a in self.index.items():
            m[i][j] = x[a]
            if i != j:
                m[j][i] = x[a]
        return m

    def from_matrix(self, m):
        return [m[i][j] for (i, j) in self.pairs]

    def mul(self, x, y):
        mx, my = self.to_matrix(x), self.to_matrix(y)
        z = la.mat_scale(Fraction(1, 2), la.mat_add(la.mat_mul(mx, my), la.mat_mul(my, mx)))
        return self.from_matrix(z)

    def unit(self):
        return self.from_matrix(la.identity(self.k))

    def trace(self, x):
        return sum(x[self.index[(i, i)]] for i in range(self.k))

    def determinant(self, x):
        return la.det(self.to_matrix(x))

    def theta_matrix(self):
        return la.identity(self.n)

    def frame(self):
        out = []
        for i in range(self.k):
            m = [[Fraction(0)] * self.k for _ in range(self.k)]
            m[i][i] = Fraction(1)
            out.append(self.from_matrix(m))
        return out


class MatReal(JordanAlgebra):
    """Full k x k matrices with the symmetrized product; the involution
    is transposition, whose fixed part is the symmetric family."""

    def __init__(self, consts: Constants):
        super().__init__(consts)
        self.k = consts.params[0]
        self.index, self.pairs = _MatrixCoords.full_index(self.k)

    def to_matrix(self, x):
        k = self.k
        return [[x[self.index[(i, j)]] for j in range(k)] for i in range(k)]

    def from_matrix(self, m):
        return [m[i][j] for (i, j) in self.pairs]

    def mul(self, x, y):
        mx, my = self.to_matrix(x), self.to_matrix(y)
        z = la.mat_scale(Fraction(1, 2), la.mat_add(la.mat_mul(mx, my), la.mat_mul(my, mx)))
        return self.from_matrix(z)

    def unit(self):
        return self.from_matrix(la.identity(self.k))

    def trace(self, x):
        return sum(x[self.index[(i, i)]] for i in range(self.k))

    def determinant(self, x):
        return la.det(self.to_matrix(x))

    def theta_matrix(self):
        n = self.n
        th = la.zeros(n, n)
        for (i, j), a in self.index.items():
            th[self.index[(j, i)]][a] = Fraction(1)
        return th

    def frame(self):
        out = []
        for i in range(self.k):
            m = [[Fraction(0)] * self.k for _ in range(self.k)]
            m[i][i] = Fraction(1)
            out.append(self.from_matrix(m))
        return out


class BilinearFormAlgebra(JordanAlgebra):
    """R^{p,q}: x = (x1, x') with product

        (a, u) o (b, v) = (a b + beta(u, v), a v + b u),

    beta = diag(-1_{p-1}, +1_q) on the last n-1 coordinates.  Covers the
    euclidean p = 1 rows, the split p, q >= 2 rows and the anisotropic
    q = 0 family (whose fixed part is the real line and whose nonzero
    orbit is open).
    """

    def __init__(self, consts: Constants, p: int, q: int):
        super().__init__(consts)
        self.p, self.q = p, q
        self.beta_diag = [Fraction(-1)] * (p - 1) + [Fraction(1)] * q

    def mul(self, x, y):
        a, b = x[0], y[0]
        bform = sum(bd * xi * yi for bd, xi, yi in zip(self.beta_diag, x[1:], y[1:]))
        head = a * b + bform
        tail = [a * yi + b * xi for xi, yi in zip(x[1:], y[1:])]
        return [head] + tail

    def unit(self):
        return [Fraction(1)] + [Fraction(0)] * (self.n - 1)

    def trace(self, x):
        return 2 * x[0]

    def determinant(self, x):
        return x[0] * x[0] - sum(bd * xi * xi for bd, xi in zip(self.beta_diag, x[1:]))

    def theta_matrix(self):
        diag = [Fraction(1)] + list(self.beta_diag)
        th = la.zeros(self.n, self.n)
        for i, v in enumerate(diag):
            th[i][i] = v
        return th

    def frame(self):
        if self.q == 0:
            return [self.unit()]
        c1 = [Fraction(1, 2)] + [Fraction(0)] * (self.n - 2) + [Fraction(1, 2)]
        c2 = [Fraction(1, 2)] + [Fraction(0)] * (self.n - 2) + [Fraction(-1, 2)]
        return [c1, c2]


def _make_sym(c: Constants):
    return SymReal(c)


def _make_mat(c: Constants):
    return MatReal(c)


def _make_real_line(c: Constants):
    return RealLine(c)


def _make_lorentz(c: Constants):
    return BilinearFormAlgebra(c, 1, c.params[0] - 1)


def _make_rpq(c: Constants):
    return BilinearFormAlgebra(c, c.params[0], c.params[1])


def _make_rk0(c: Constants):
    return BilinearFormAlgebra(c, c.params[0], 0)


_ALGEBRA_MAKERS = {
    "R": _make_real_line,
    "Sym(k,R)": _make_sym,
    "M(k,R)": _make_mat,
    "R(1,k-1)": _make_lorentz,
    "R(p,q)": _make_rpq,
    "R(k,0)": _make_rk0,
}
