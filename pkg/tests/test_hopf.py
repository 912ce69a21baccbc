"""Hopf-core checkers and the convolution calculus.

The ordinary four-dimensional Hopf algebra on basis {1, g, x, xg} with
relations g*g = 1, x*x = 0, x*g = -g*x serves as the main oracle; its
tables below are written out from the relations by hand, independently of
any builder in the package.
"""

from fractions import Fraction

from ydalgebra.field import RATIONALS
from ydalgebra.hopf import (
    AlgebraData,
    CoalgebraData,
    HopfData,
    check_algebra,
    check_coalgebra,
    check_hopf,
    convolution,
    convolution_inverse,
    hom_convolution_inverse_endo,
    ActionTensor,
    is_cocommutative,
    unit_counit_map,
    solve_antipode,
)
from ydalgebra.linalg import Matrix, Vector, identity_matrix, unit_vector

F = Fraction
ONE, G, X, XG = range(4)


def vec(coeffs):
    return Vector(4, {i: F(c) for i, c in enumerate(coeffs) if c}, RATIONALS)


def h4_algebra():
    # rows e_i * e_j from g*g=1, x*x=0, x*g = -g*x (so the basis word xg = x*g)
    z = [0, 0, 0, 0]
    table = {
        (ONE, ONE): [1, 0, 0, 0], (ONE, G): [0, 1, 0, 0],
        (ONE, X): [0, 0, 1, 0], (ONE, XG): [0, 0, 0, 1],
        (G, ONE): [0, 1, 0, 0], (G, G): [1, 0, 0, 0],
        (G, X): [0, 0, 0, -1], (G, XG): [0, 0, -1, 0],
        (X, ONE): [0, 0, 1, 0], (X, G): [0, 0, 0, 1],
        (X, X): z, (X, XG): z,
        (XG, ONE): [0, 0, 0, 1], (XG, G): [0, 0, 1, 0],
        (XG, X): z, (XG, XG): z,
    }
    mul = [[vec(table[(i, j)]) for j in range(4)] for i in range(4)]
    return AlgebraData(4, ["1", "g", "x", "xg"], mul, vec([1, 0, 0, 0]), RATIONALS)


def h4_coalgebra():
    one = F(1)
    comul = [
        [(ONE, ONE, one)],
        [(G, G, one)],
        [(X, ONE, one), (G, X, one)],
        [(XG, G, one), (ONE, XG, one)],
    ]
    return CoalgebraData(4, comul, vec([1, 1, 0, 0]), RATIONALS)


def h4_antipode():
    # T(1)=1, T(g)=g, T(x)=xg, T(xg)=-x  (from the antipode identities)
    return Matrix(4, 4, {
        (ONE, ONE): F(1), (G, G): F(1), (XG, X): F(1), (X, XG): F(-1),
    }, RATIONALS)


def h4_hopf():
    return HopfData(h4_algebra(), h4_coalgebra(), h4_antipode())


def test_h4_algebra_passes():
    assert check_algebra(h4_algebra()).all_pass()


def test_field_algebra_passes():
    a = AlgebraData(
        1, ["1"],
        [[Vector(1, {0: F(1)}, RATIONALS)]],
        Vector(1, {0: F(1)}, RATIONALS), RATIONALS,
    )
    assert check_algebra(a).all_pass()


def test_perturbed_h4_fails_associativity():
    a = h4_algebra()
    a.mul[X][X] = vec([1, 0, 0, 0])
    rep = check_algebra(a)
    entry = rep.entry("ALG-ASSOC")
    assert entry.status == "fail"
    # lexicographically first failure is (g,x,x); (x,x,g) fails as well:
    # (x*x)*g = g while x*(x*g) = 0
    assert entry.witness.where == (G, X, X)
    lhs = a.mul_vec_basis(a.mul[X][X], G)
    rhs = a.mul_basis_vec(X, a.mul[X][G])
    assert lhs != rhs


def test_grouplike_coalgebra_passes():
    comul = [[(i, i, F(1))] for i in range(3)]
    c = CoalgebraData(3, comul, Vector(3, {i: F(1) for i in range(3)}, RATIONALS), RATIONALS)
    assert check_coalgebra(c).all_pass()


def test_h4_coalgebra_passes():
    assert check_coalgebra(h4_coalgebra()).all_pass()


def test_broken_counit_fails():
    comul = [
        [(ONE, ONE, F(1))],
        [(G, G, F(1))],
        [(X, ONE, F(1))],          # missing the g (x) x leg
        [(XG, G, F(1)), (ONE, XG, F(1))],
    ]
    c = CoalgebraData(4, comul, vec([1, 1, 0, 0]), RATIONALS)
    rep = check_coalgebra(c)
    assert rep.entry("COALG-COUNIT").status == "fail"


def test_h4_hopf_passes():
    assert check_hopf(h4_hopf()).all_pass()


def test_c2_group_algebra_hopf_passes():
    one = F(1)
    mul = [
        [Vector(2, {0: one}, RATIONALS), Vector(2, {1: one}, RATIONALS)],
        [Vector(2, {1: one}, RATIONALS), Vector(2, {0: one}, RATIONALS)],
    ]
    a = AlgebraData(2, ["e", "t"], mul, Vector(2, {0: one}, RATIONALS), RATIONALS)
    c = CoalgebraData(2, [[(0, 0, one)], [(1, 1, one)]],
                      Vector(2, {0: one, 1: one}, RATIONALS), RATIONALS)
    h = HopfData(a, c, identity_matrix(2, RATIONALS))
    assert check_hopf(h).all_pass()
    assert is_cocommutative(c)


def test_h4_antipode_sign_flip_fails():
    h = h4_hopf()
    bad = Matrix(4, 4, {
        (ONE, ONE): F(1), (G, G): F(1), (XG, X): F(-1), (X, XG): F(-1),
    }, RATIONALS)
    rep = check_hopf(HopfData(h.algebra, h.coalgebra, bad))
    assert rep.entry("HOPF-ANTIPODE").status == "fail"


def test_convolution_unit_idempotent():
    a, c = h4_algebra(), h4_coalgebra()
    ue = unit_counit_map(c, a)
    assert convolution(ue, ue, c, a) == ue


def test_convolution_id_star_antipode_is_unit():
    a, c = h4_algebra(), h4_coalgebra()
    ident = identity_matrix(4, RATIONALS)
    ue = unit_counit_map(c, a)
    assert convolution(ident, h4_antipode(), c, a) == ue
    assert convolution(h4_antipode(), ident, c, a) == ue


def test_convolution_id_id_squares_grouplikes():
    one = F(1)
    comul = [[(i, i, one)] for i in range(2)]
    c = CoalgebraData(2, comul, Vector(2, {0: one, 1: one}, RATIONALS), RATIONALS)
    mul = [
        [Vector(2, {0: one}, RATIONALS), Vector(2, {1: one}, RATIONALS)],
        [Vector(2, {1: one}, RATIONALS), Vector(2, {0: one}, RATIONALS)],
    ]
    a = AlgebraData(2, ["e", "t"], mul, Vector(2, {0: one}, RATIONALS), RATIONALS)
    ident = identity_matrix(2, RATIONALS)
    sq = convolution(ident, ident, c, a)
    for i in range(2):
        assert sq.column(i) == a.mul_vec(unit_vector(2, i, RATIONALS), unit_vector(2, i, RATIONALS))


def test_convolution_inverse_of_unit_map():
    a, c = h4_algebra(), h4_coalgebra()
    ue = unit_counit_map(c, a)
    assert convolution_inverse(ue, c, a) == ue


def test_solve_antipode_recovers_h4_antipode():
    a, c = h4_algebra(), h4_coalgebra()
    assert solve_antipode(a, c) == h4_antipode()


def test_convolution_inverse_none_for_nilpotent_grouplike():
    # 2-dim algebra e*e = 0 with Delta(e) = e (x) e: the identity map has no
    # convolution inverse because e would need an inverse-like partner
    one = F(1)
    mul = [
        [Vector(2, {0: one}, RATIONALS), Vector(2, {1: one}, RATIONALS)],
        [Vector(2, {1: one}, RATIONALS), Vector(2, {}, RATIONALS)],
    ]
    a = AlgebraData(2, ["1", "e"], mul, Vector(2, {0: one}, RATIONALS), RATIONALS)
    c = CoalgebraData(2, [[(0, 0, one)], [(1, 1, one)]],
                      Vector(2, {0: one, 1: one}, RATIONALS), RATIONALS)
    assert convolution_inverse(identity_matrix(2, RATIONALS), c, a) is None


def test_hom_convolution_inverse_trivial_action():
    a, c = h4_algebra(), h4_coalgebra()
    rows = []
    for i in range(4):
        eps_i = c.eps(i)
        rows.append([unit_vector(4, j, RATIONALS).scale(eps_i) for j in range(4)])
    alpha = ActionTensor(4, 4, rows, RATIONALS)
    res = hom_convolution_inverse_endo(alpha, c)
    assert res.beta is not None and res.kernel_dim == 0
    assert res.beta.act == alpha.act
