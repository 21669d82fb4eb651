from fractions import Fraction

import pytest

from minrep_lab.algebras import constants
from minrep_lab.conformal import ConformalAlgebra


FAMILIES = [
    ("Sym(k,R)", (2,), 10),
    ("Sym(k,R)", (3,), 21),
    ("R(p,q)", (2, 2), 15),
    ("R(p,q)", (2, 3), 21),
    ("R(k,0)", (3,), 10),
    ("M(k,R)", (2,), 15),
]


@pytest.fixture(scope="module", params=FAMILIES, ids=lambda f: f"{f[0]}{f[1]}")
def algebra(request):
    name, params, dim_g = request.param
    C = constants(name, *params)
    return ConformalAlgebra(C.algebra()), C, dim_g


def test_dimension_matches_table(algebra):
    A, C, dim_g = algebra
    assert A.dim == dim_g
    assert A.dim == C.lie["g"][1]
    assert A.dim == 2 * C.n + A.dim_str


def test_jacobi_identity_exact(algebra):
    A, _, _ = algebra
    assert A.jacobi_failures() == []


def test_three_grading_exact(algebra):
    A, _, _ = algebra
    assert A.grading_failures() == []


def test_bracket_antisymmetry_on_basis(algebra):
    A, _, _ = algebra
    for i in range(A.dim):
        x = [Fraction(int(i == t)) for t in range(A.dim)]
        for j in range(i, A.dim):
            y = [Fraction(int(j == t)) for t in range(A.dim)]
            xy = A.bracket_coords(x, y)
            yx = A.bracket_coords(y, x)
            assert xy == [-c for c in yx]


def test_euler_element_grades(algebra):
    # ad(euler) acts by -1, 0, +1 on the v / structure / u slots
    A, _, _ = algebra
    h = A.euler()
    for idx in range(A.dim):
        X = A.basis_element(idx)
        want = [-A.grade(idx) * c for c in A.coords(X)]
        assert A.bracket_coords(A.coords(h), A.coords(X)) == want


def test_cartan_involution_is_automorphism():
    A = ConformalAlgebra(constants("Sym(k,R)", 2).algebra())
    import random
    rng = random.Random(3)

    def rand():
        return [Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(A.dim)]

    for _ in range(4):
        x, y = rand(), rand()
        tx = A.coords(A.theta(A.from_coords(x)))
        ty = A.coords(A.theta(A.from_coords(y)))
        lhs = A.coords(A.theta(A.from_coords(A.bracket_coords(x, y))))
        assert lhs == A.bracket_coords(tx, ty)


def test_killing_form_invariance():
    A = ConformalAlgebra(constants("R(k,0)", 2).algebra())
    import random
    rng = random.Random(8)

    def rand():
        return A.from_coords([Fraction(rng.randint(-2, 2))
                              for _ in range(A.dim)])

    for _ in range(3):
        x, y, z = rand(), rand(), rand()
        xy = A.from_coords(A.bracket_coords(A.coords(x), A.coords(y)))
        yz = A.from_coords(A.bracket_coords(A.coords(y), A.coords(z)))
        # K([x,y], z) = K(x, [y,z])
        assert A.killing(xy, z) == A.killing(x, yz)


def test_casimir_data_shape():
    A = ConformalAlgebra(constants("Sym(k,R)", 2).algebra())
    elems, ginv = A.casimir_data
    C = constants("Sym(k,R)", 2)
    # dim k for sp(2,R) is dim su(2)+R = 4
    assert len(elems) == C.lie["k"][1] == 4
    assert len(ginv) == len(elems)
    # inverse Gram is symmetric
    for i in range(len(ginv)):
        for j in range(len(ginv)):
            assert ginv[i][j] == ginv[j][i]
