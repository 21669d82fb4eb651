"""Conformal Lie algebra attached to a Jordan algebra.

Elements are triples ``X = (u, T, v)`` with ``u, v`` in the algebra and
``T`` in the structure algebra ``str(V) = span{ a box b }``; the bracket
is

    [X1, X2] = ( T1 u2 - T2 u1,
                 [T1, T2] + 2 (u1 box v2) - 2 (u2 box v1),
                 -T1# v2 + T2# v1 )

with ``T#`` the adjoint w.r.t. the trace form.  This realizes the
3-graded algebra g = n + str(V) + nbar with abelian pieces n = {(u,0,0)}
and nbar = {(0,0,v)}.

The Cartan involution is ``theta(u, T, v) = (-theta v, -T*, -theta u)``
where ``T*`` is the adjoint w.r.t. the positive definite form
``(x|y) = tau(x, theta y)``; its fixed algebra k has basis vectors
``(u, 0, -theta u)`` and the skew part of str(V).

Everything is exact over Fraction: structure constants, the Jacobi
identity, Killing forms, and the invariant bilinear form used to build
the Casimir element of k.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from . import linalg as la
from .algebras import JordanAlgebra

__all__ = ["ConformalAlgebra"]


def _vec_of_mat(m):
    return [entry for row in m for entry in row]


class ConformalAlgebra:
    def __init__(self, V: JordanAlgebra):
        self.V = V
        self.n = V.n
        self.consts = V.consts

    # -- elements -----------------------------------------------------------

    def element(self, u=None, T=None, v=None):
        n = self.n
        zu = [Fraction(0)] * n
        zT = la.zeros(n, n)
        return (list(u) if u is not None else list(zu),
                [row[:] for row in T] if T is not None else zT,
                list(v) if v is not None else list(zu))

    def bracket(self, X, Y):
        V = self.V
        u1, T1, v1 = X
        u2, T2, v2 = Y
        u = la.vec_sub(la.mat_vec(T1, u2), la.mat_vec(T2, u1))
        T = la.mat_add(
            la.mat_sub(la.mat_mul(T1, T2), la.mat_mul(T2, T1)),
            la.mat_sub(la.mat_scale(2, V.box(u1, v2)), la.mat_scale(2, V.box(u2, v1))))
        s1, s2 = V.tau_adjoint(T1), V.tau_adjoint(T2)
        v = la.vec_sub(la.mat_vec(s2, v1), la.mat_vec(s1, v2))
        return (u, T, v)

    def theta(self, X):
        V = self.V
        u, T, v = X
        th = V.theta_matrix()
        return ([-c for c in la.mat_vec(th, v)],
                la.mat_scale(-1, V.inner_adjoint(T)),
                [-c for c in la.mat_vec(th, u)])

    def euler(self):
        """The grading element (0, id, 0)."""
        return self.element(T=la.identity(self.n))

    # -- structure algebra --------------------------------------------------

    @cached_property
    def l_basis(self):
        """Independent spanning set for str(V) among the a box b."""
        n = self.n
        b = self.V.basis()
        cands = [self.V.box(b[a], b[c]) for a in range(n) for c in range(n)]
        rows = [_vec_of_mat(m) for m in cands]
        _, pivots = la.rref(la.transpose(rows))
        return [cands[j] for j in pivots]

    @cached_property
    def _l_solver(self):
        """Row-selection solver for expressing T in the l_basis."""
        cols = [_vec_of_mat(m) for m in self.l_basis]
        A = la.transpose(cols)          # (n^2) x m
        _, pivot_rows = la.rref(cols)   # independent rows of A
        S = [A[i] for i in pivot_rows]
        return A, pivot_rows, la.inverse(S)

    def l_coords(self, T):
        A, rows, S_inv = self._l_solver
        b = _vec_of_mat(T)
        x = la.mat_vec(S_inv, [b[i] for i in rows])
        if la.mat_vec(A, x) != b:
            raise ValueError("matrix does not lie in the structure algebra")
        return x

    @property
    def dim_str(self):
        return len(self.l_basis)

    @property
    def dim(self):
        return 2 * self.n + self.dim_str

    @cached_property
    def basis_labels(self):
        n = self.n
        return ([("u", a) for a in range(n)]
                + [("T", i) for i in range(self.dim_str)]
                + [("v", a) for a in range(n)])

    def basis_element(self, idx):
        kind, a = self.basis_labels[idx]
        n = self.n
        if kind == "u":
            u = [Fraction(0)] * n
            u[a] = Fraction(1)
            return self.element(u=u)
        if kind == "T":
            return self.element(T=self.l_basis[a])
        v = [Fraction(0)] * n
        v[a] = Fraction(1)
        return self.element(v=v)

    def grade(self, idx):
        kind, _ = self.basis_labels[idx]
        return {"u": -1, "T": 0, "v": 1}[kind]

    def coords(self, X):
        u, T, v = X
        return list(u) + self.l_coords(T) + list(v)

    def from_coords(self, vec):
        n, m = self.n, self.dim_str
        T = la.zeros(n, n)
        for i in range(m):
            if vec[n + i]:
                T = la.mat_add(T, la.mat_scale(vec[n + i], self.l_basis[i]))
        return (list(vec[:n]), T, list(vec[n + m:]))

    # -- structure constants and identities ----------------------------------

    @cached_property
    def structure(self):
        """structure[(i, j)] for i < j: sparse coords of [e_i, e_j]."""
        dim = self.dim
        elems = [self.basis_element(i) for i in range(dim)]
        out = {}
        for i in range(dim):
            for j in range(i + 1, dim):
                c = self.coords(self.bracket(elems[i], elems[j]))
                entry = {m: val for m, val in enumerate(c) if val}
                if entry:
                    out[(i, j)] = entry
        return out

    def _pair_bracket(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {m: -v for m, v in self.structure.get((j, i), {}).items()}

    def bracket_coords(self, x, y):
        """Bracket of two coordinate vectors via structure constants."""
        out = {}
        nz_x = [(i, v) for i, v in enumerate(x) if v]
        nz_y = [(j, v) for j, v in enumerate(y) if v]
        for i, xi in nz_x:
            for j, yj in nz_y:
                c = xi * yj
                for m, v in self._pair_bracket(i, j).items():
                    out[m] = out.get(m, Fraction(0)) + c * v
        return [out.get(m, Fraction(0)) for m in range(self.dim)]

    def jacobi_failures(self, max_report=5):
        """Triples (i, j, k) of basis indices violating the Jacobi identity."""
        dim = self.dim
        bad = []
        for i in range(dim):
            for j in range(i + 1, dim):
                cij = self._pair_bracket(i, j)
                for k in range(j + 1, dim):
                    acc = {}
                    for m, v in cij.items():
                        for l, w in self._pair_bracket(m, k).items():
                            acc[l] = acc.get(l, Fraction(0)) + v * w
                    for m, v in self._pair_bracket(j, k).items():
                        for l, w in self._pair_bracket(m, i).items():
                            acc[l] = acc.get(l, Fraction(0)) + v * w
                    for m, v in self._pair_bracket(k, i).items():
                        for l, w in self._pair_bracket(m, j).items():
                            acc[l] = acc.get(l, Fraction(0)) + v * w
                    if any(acc.values()):
                        bad.append((i, j, k))
                        if len(bad) >= max_report:
                            return bad
        return bad

    def grading_failures(self):
        """Pairs whose bracket leaves the expected graded piece."""
        bad = []
        for (i, j), entry in self.structure.items():
            g = self.grade(i) + self.grade(j)
            for m, v in entry.items():
                if abs(g) > 1 or self.grade(m) != g:
                    bad.append((i, j, m))
        return bad

    # -- Killing form ---------------------------------------------------------

    @cached_property
    def _ad_matrices(self):
        dim = self.dim
        ads = []
        for i in range(dim):
            ad = [dict() for _ in range(dim)]  # column j -> sparse
            for j in range(dim):
                for m, v in self._pair_bracket(i, j).items():
                    ad[j][m] = v
            ads.append(ad)
        return ads

    @cached_property
    def killing_gram(self):
        dim = self.dim
        ads = self._ad_matrices
        g = la.zeros(dim, dim)
        for i in range(dim):
            for j in range(i, dim):
                # Tr(ad_i ad_j) = sum_a sum_b (ad_i)_{a b} (ad_j)_{b a}
                tot = Fraction(0)
                for b in range(dim):
                    col_j = ads[j][b]
                    for a, vja in col_j.items():
                        vij = ads[i][a].get(b)
                        if vij:
                            tot += vij * vja
                g[i][j] = tot
                g[j][i] = tot
        return g

    def killing(self, X, Y):
        x, y = self.coords(X), self.coords(Y)
        g = self.killing_gram
        return sum(x[i] * g[i][j] * y[j]
                   for i in range(self.dim) for j in range(self.dim)
                   if x[i] and g[i][j] and y[j])

    # -- maximal compact subalgebra -------------------------------------------

    @cached_property
    def k_basis(self):
        """Coordinate vectors spanning the theta-fixed subalgebra."""
        n, m = self.n, self.dim_str
        th = self.V.theta_matrix()
        out = []
        for a in range(n):
            vec = [Fraction(0)] * self.dim
            vec[a] = Fraction(1)
            for i in range(n):
                vec[n + m + i] = -th[i][a]
            out.append(vec)
        # skew part of str(V): T + T* = 0, in l-coordinates
        rows = []
        sums = [la.mat_add(t, self.V.inner_adjoint(t)) for t in self.l_basis]
        vecs = [_vec_of_mat(s) for s in sums]
        for comp in range(n * n):
            rows.append([vecs[i][comp] for i in range(m)])
        for null in la.nullspace(rows):
            vec = [Fraction(0)] * self.dim
            for i in range(m):
                vec[n + i] = null[i]
            out.append(vec)
        return out

    def center_of_k(self):
        """Basis of the center of k, as coordinate vectors."""
        kb = self.k_basis
        rows = []
        for y in kb:
            cols = [self.bracket_coords(x, y) for x in kb]
            for comp in range(self.dim):
                rows.append([cols[i][comp] for i in range(len(kb))])
        out = []
        for null in la.nullspace(rows):
            vec = [Fraction(0)] * self.dim
            for i, c in enumerate(null):
                if c:
                    vec = la.vec_add(vec, la.vec_scale(c, kb[i]))
            out.append(vec)
        return out

    # -- invariant form on k and the Casimir Gram matrix ----------------------

    @cached_property
    def l_killing_gram(self):
        """Killing form of the structure algebra on l_basis coordinates."""
        m = self.dim_str
        # structure constants of l alone
        cs = {}
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                comm = la.mat_sub(la.mat_mul(self.l_basis[i], self.l_basis[j]),
                                  la.mat_mul(self.l_basis[j], self.l_basis[i]))
                cs[(i, j)] = self.l_coords(comm)
        g = la.zeros(m, m)
        for i in range(m):
            for j in range(i, m):
                tot = Fraction(0)
                for b in range(m):
                    if b == j:
                        continue
                    col = cs[(j, b)]
                    for a in range(m):
                        if a != i and col[a]:
                            tot += cs[(i, a)][b] * col[a]
                g[i][j] = tot
                g[j][i] = tot
        return g

    def invariant_form_k(self, X, Y):
        """<X1, X2> = B_l(T1, T2*) + 2 Tr(T1 T2*) + (8n/r) (u1|u2) on k."""
        V = self.V
        u1, T1, _ = X
        u2, T2, _ = Y
        t1 = self.l_coords(T1)
        t2s = self.l_coords(V.inner_adjoint(T2))
        gl = self.l_killing_gram
        m = self.dim_str
        bl = sum(t1[i] * gl[i][j] * t2s[j] for i in range(m) for j in range(m)
                 if t1[i] and gl[i][j] and t2s[j])
        tr = la.trace(la.mat_mul(T1, V.inner_adjoint(T2)))
        inner = V.inner(u1, u2)
        return bl + 2 * tr + Fraction(8 * self.n, self.consts.r) * inner

    @cached_property
    def casimir_data(self):
        """(k-basis elements, exact inverse Gram of the invariant form)."""
        kb = self.k_basis
        elems = [self.from_coords(v) for v in kb]
        gram = [[self.invariant_form_k(x, y) for y in elems] for x in elems]
        return elems, la.inverse(gram)
