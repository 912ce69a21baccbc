"""Yetter-Drinfeld braces, matched pairs of actions, and the functors
between them and post-Hopf structures.

The brace bundles a braided side (., S) and an ordinary Hopf side (o, T)
over one shared coalgebra; the matched pair lives on the subadjacent Hopf
algebra.  The conversions here are each other's strict inverses on
structure constants, and the checkers verify that instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import FieldSpec, Scalar
from .hopf import (
    ActionTensor,
    AlgebraData,
    BraidedPair,
    HopfData,
    StructureError,
    check_hopf,
    tens2_add_scaled,
)
from .linalg import Matrix, Vector, add_scaled_inplace, matrix_from_columns, unit_vector
from .report import Checker, CheckEntry, CheckReport, FAIL, PASS, Witness, pairs_text, vector_text
from .posthopf import (
    YDPostHopf,
    bullet_algebra,
    check_yd_hopf_monoid,
    check_yd_post_hopf,
    leftharpoon,
    sharp_antipode,
    subadjacent_hopf,
)


@dataclass
class YDBrace:
    """dot side (., S) as a braided pair; bullet side (o, T) an ordinary Hopf
    algebra on the same coalgebra.  Both antipodes are stored explicitly."""

    dot_side: BraidedPair
    bullet_side: HopfData
    params: dict[str, Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.dot_side.dim != self.bullet_side.dim:
            raise StructureError("brace sides must share one dimension")
        if self.dot_side.coalgebra != self.bullet_side.coalgebra:
            raise StructureError("brace sides must share the coalgebra")

    @property
    def dim(self) -> int:
        return self.dot_side.dim

    @property
    def field(self) -> FieldSpec:
        return self.dot_side.field


@dataclass
class MatchedPair:
    """Hopf algebra with a left action and a right action of itself."""

    hopf: HopfData
    left_action: ActionTensor
    right_action: ActionTensor
    params: dict[str, Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        d = self.hopf.dim
        for t in (self.left_action, self.right_action):
            if t.acting_dim != d or t.target_dim != d:
                raise StructureError("matched-pair action shape mismatch")

    @property
    def dim(self) -> int:
        return self.hopf.dim

    @property
    def field(self) -> FieldSpec:
        return self.hopf.field


def brace_action(b: YDBrace) -> ActionTensor:
    """The induced action a >- b = S(a_1) . (a_2 o b)."""
    d = b.dim
    fs = b.field
    alg = b.dot_side.algebra
    coalg = b.dot_side.coalgebra
    bullet = b.bullet_side.algebra
    smap = b.dot_side.s_map
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc: dict[int, Scalar] = {}
            for i1, i2, c in coalg.comul[i]:
                add_scaled_inplace(acc, alg.mul_vec(smap.column(i1), bullet.mul[i2][j]), c)
            row.append(Vector(d, acc, fs))
        rows.append(row)
    return ActionTensor(d, d, rows, fs)


def brace_beta(b: YDBrace, action: ActionTensor) -> ActionTensor:
    """beta_a = (T(a) >- -), with T the bullet-side antipode."""
    d = b.dim
    fs = b.field
    t_map = b.bullet_side.antipode
    rows = []
    for i in range(d):
        tv = t_map.column(i)
        row = [action.apply(tv, unit_vector(d, j, fs)) for j in range(d)]
        rows.append(row)
    return ActionTensor(d, d, rows, fs)


def functor_g(b: YDBrace) -> YDPostHopf:
    """Brace to post-Hopf: keep the dot side, induce the action and beta."""
    action = brace_action(b)
    return YDPostHopf(b.dot_side, action, brace_beta(b, action), params=dict(b.params))


def functor_f(s: YDPostHopf) -> YDBrace:
    """Post-Hopf to brace: bullet side is the subadjacent Hopf algebra."""
    hopf = HopfData(bullet_algebra(s), s.carrier.coalgebra, sharp_antipode(s))
    return YDBrace(s.carrier, hopf, params=dict(s.params))


def check_yd_brace(b: YDBrace) -> CheckReport:
    """HB-HOPF, HB-COMPAT, HB-YD, HB-MP5 with first-failure witnesses."""
    d = b.dim
    fs = b.field
    alg = b.dot_side.algebra
    coalg = b.dot_side.coalgebra
    bullet = b.bullet_side.algebra
    smap = b.dot_side.s_map
    rep = CheckReport()

    hopf_rep = check_hopf(b.bullet_side)
    if hopf_rep.all_pass():
        rep.add(CheckEntry("HB-HOPF", PASS, checked=sum(e.checked for e in hopf_rep.entries)))
    else:
        first = hopf_rep.failed()[0]
        rep.add(CheckEntry("HB-HOPF", FAIL, Witness((first.axiom,) + first.witness.where,
                                                    first.witness.lhs, first.witness.rhs)))

    # HB-COMPAT: a o (b.c) = (a_1 o b) . S(a_2) . (a_3 o c)
    ch = Checker("HB-COMPAT")
    for a in range(d):
        legs = coalg.legs(a, 3)
        for i in range(d):
            for j in range(d):
                lhs = bullet.mul_basis_vec(a, alg.mul[i][j])
                acc: dict[int, Scalar] = {}
                for (a1, a2, a3), c in legs:
                    v = alg.mul_vec(bullet.mul[a1][i], smap.column(a2))
                    v = alg.mul_vec(v, bullet.mul[a3][j])
                    add_scaled_inplace(acc, v, c)
                ch.compare((a, i, j), lhs, Vector(d, acc, fs), vector_text)
    rep.add(ch.entry())

    # HB-YD: the induced post-Hopf data reproduces the bullet side and passes
    # the Hopf-monoid-in-YD checks
    s = functor_g(b)
    sub_fail: tuple | None = None
    derived_bullet = bullet_algebra(s)
    for i in range(d):
        for j in range(d):
            if derived_bullet.mul[i][j] != bullet.mul[i][j]:
                sub_fail = ((i, j), vector_text(derived_bullet.mul[i][j]), vector_text(bullet.mul[i][j]))
                break
        if sub_fail:
            break
    if sub_fail is None:
        derived_sharp = sharp_antipode(s)
        if derived_sharp != b.bullet_side.antipode:
            sub_fail = (("antipode",), "derived S_>", "stored T")
    if sub_fail is None:
        monoid = check_yd_hopf_monoid(s)
        if not monoid.all_pass():
            first = monoid.failed()[0]
            sub_fail = ((first.axiom,) + first.witness.where, first.witness.lhs, first.witness.rhs)
    if sub_fail is None:
        rep.add(CheckEntry("HB-YD", PASS, checked=d * d))
    else:
        rep.add(CheckEntry("HB-YD", FAIL, Witness(*sub_fail)))

    # HB-MP5 on the induced pair (>-, -<)
    act = s.action
    harp = leftharpoon(s)
    ch = Checker("HB-MP5")
    for i in range(d):
        for j in range(d):
            lhs: dict[tuple[int, int], Scalar] = {}
            rhs: dict[tuple[int, int], Scalar] = {}
            for i1, i2, ci in coalg.comul[i]:
                for j1, j2, cj in coalg.comul[j]:
                    tens2_add_scaled(lhs, act.act[i1][j1], harp.act[i2][j2], ci * cj)
                    tens2_add_scaled(rhs, act.act[i2][j2], harp.act[i1][j1], ci * cj)
            ch.compare((i, j), lhs, rhs, pairs_text)
    rep.add(ch.entry())
    return rep


def to_matched_pair(s: YDPostHopf) -> MatchedPair:
    """(subadjacent Hopf, >-, -<) with the right action from the harpoon."""
    hopf = subadjacent_hopf(s, verify=False)
    return MatchedPair(hopf, s.action, leftharpoon(s), params=dict(s.params))


def from_matched_pair(mp: MatchedPair) -> YDPostHopf:
    """Braided product a.b = a_1 o (T(a_2) >- b) and S(a) = a_1 >- T(a_2)."""
    d = mp.dim
    fs = mp.field
    hopf = mp.hopf
    coalg = hopf.coalgebra
    bullet = hopf.algebra
    t_map = hopf.antipode
    act = mp.left_action
    mul = []
    for i in range(d):
        row = []
        for j in range(d):
            acc: dict[int, Scalar] = {}
            for i1, i2, c in coalg.comul[i]:
                w = act.apply(t_map.column(i2), unit_vector(d, j, fs))
                add_scaled_inplace(acc, bullet.mul_basis_vec(i1, w), c)
            row.append(Vector(d, acc, fs))
        mul.append(row)
    alg = AlgebraData(d, list(bullet.basis_labels), mul, bullet.unit, fs)
    cols = []
    for i in range(d):
        acc: dict[int, Scalar] = {}
        for i1, i2, c in coalg.comul[i]:
            add_scaled_inplace(acc, act.apply_basis(i1, t_map.column(i2)), c)
        cols.append(Vector(d, acc, fs))
    smap = matrix_from_columns(cols, fs)
    carrier = BraidedPair(alg, coalg, smap)
    beta_rows = []
    for i in range(d):
        tv = t_map.column(i)
        beta_rows.append([act.apply(tv, unit_vector(d, j, fs)) for j in range(d)])
    return YDPostHopf(carrier, act, ActionTensor(d, d, beta_rows, fs),
                      params=dict(mp.params))


def check_matched_pair(mp: MatchedPair) -> CheckReport:
    """Module-coalgebra actions plus the matched-pair equations MP-1..5, MP-BC."""
    d = mp.dim
    fs = mp.field
    hopf = mp.hopf
    alg = hopf.algebra
    coalg = hopf.coalgebra
    left, right = mp.left_action, mp.right_action
    rep = CheckReport()

    ch = Checker("MP-MODC")
    for i in range(d):
        for j in range(d):
            # coalgebra-morphism property of both actions
            lhs = coalg.comul_vec(left.act[i][j])
            rhs: dict[tuple[int, int], Scalar] = {}
            for i1, i2, ci in coalg.comul[i]:
                for j1, j2, cj in coalg.comul[j]:
                    tens2_add_scaled(rhs, left.act[i1][j1], left.act[i2][j2], ci * cj)
            ch.compare((0, i, j), lhs, rhs, pairs_text)
            ch.compare((1, i, j), coalg.eps_vec(left.act[i][j]), coalg.eps(i) * coalg.eps(j))
            lhs = coalg.comul_vec(right.act[i][j])
            rhs = {}
            for i1, i2, ci in coalg.comul[i]:
                for j1, j2, cj in coalg.comul[j]:
                    tens2_add_scaled(rhs, right.act[i1][j1], right.act[i2][j2], ci * cj)
            ch.compare((2, i, j), lhs, rhs, pairs_text)
            ch.compare((3, i, j), coalg.eps_vec(right.act[i][j]), coalg.eps(i) * coalg.eps(j))
            # action axioms over the Hopf product
            w = alg.mul[i][j]
            for k in range(d):
                lhs_v = left.apply(w, unit_vector(d, k, fs))
                rhs_v = left.apply_basis(i, left.act[j][k])
                ch.compare((4, i, j, k), lhs_v, rhs_v, vector_text)
                lhs_v = right.apply(right.act[k][i], unit_vector(d, j, fs))
                rhs_v = right.apply_basis(k, w)
                ch.compare((5, i, j, k), lhs_v, rhs_v, vector_text)
    for j in range(d):
        ch.compare((6, j), left.apply(alg.unit, unit_vector(d, j, fs)), unit_vector(d, j, fs), vector_text)
        ch.compare((7, j), right.apply(unit_vector(d, j, fs), alg.unit), unit_vector(d, j, fs), vector_text)
    rep.add(ch.entry())

    ch = Checker("MP-1")
    for i in range(d):
        ch.compare((i,), left.apply_basis(i, alg.unit), alg.unit.scale(coalg.eps(i)), vector_text)
    rep.add(ch.entry())

    ch = Checker("MP-2")
    for i in range(d):
        ch.compare((i,), right.apply(alg.unit, unit_vector(d, i, fs)), alg.unit.scale(coalg.eps(i)), vector_text)
    rep.add(ch.entry())

    # MP-3: a >- (b o c) = (a_1 >- b_1) o ((a_2 -< b_2) >- c)
    ch = Checker("MP-3")
    for a in range(d):
        for b in range(d):
            pieces = []
            for a1, a2, ca in coalg.comul[a]:
                for b1, b2, cb in coalg.comul[b]:
                    pieces.append((left.act[a1][b1], right.act[a2][b2], ca * cb))
            for c in range(d):
                lhs = left.apply_basis(a, alg.mul[b][c])
                acc: dict[int, Scalar] = {}
                for lv, rv, coeff in pieces:
                    w = left.apply(rv, unit_vector(d, c, fs))
                    add_scaled_inplace(acc, alg.mul_vec(lv, w), coeff)
                ch.compare((a, b, c), lhs, Vector(d, acc, fs), vector_text)
    rep.add(ch.entry())

    # MP-4: (a o b) -< c = (a -< (b_1 >- c_1)) o (b_2 -< c_2)
    ch = Checker("MP-4")
    for b in range(d):
        for c in range(d):
            pieces = []
            for b1, b2, cb in coalg.comul[b]:
                for c1, c2, cc in coalg.comul[c]:
                    pieces.append((left.act[b1][c1], right.act[b2][c2], cb * cc))
            for a in range(d):
                lhs = right.apply(alg.mul[a][b], unit_vector(d, c, fs))
                acc: dict[int, Scalar] = {}
                for lv, rv, coeff in pieces:
                    w = right.apply(unit_vector(d, a, fs), lv)
                    add_scaled_inplace(acc, alg.mul_vec(w, rv), coeff)
                ch.compare((a, b, c), lhs, Vector(d, acc, fs), vector_text)
    rep.add(ch.entry())

    # MP-BC: a o b = (a_1 >- b_1) o (a_2 -< b_2)
    ch = Checker("MP-BC")
    for a in range(d):
        for b in range(d):
            acc: dict[int, Scalar] = {}
            for a1, a2, ca in coalg.comul[a]:
                for b1, b2, cb in coalg.comul[b]:
                    add_scaled_inplace(
                        acc,
                        alg.mul_vec(left.act[a1][b1], right.act[a2][b2]),
                        ca * cb,
                    )
            ch.compare((a, b), alg.mul[a][b], Vector(d, acc, fs), vector_text)
    rep.add(ch.entry())

    ch = Checker("MP-5")
    for a in range(d):
        for b in range(d):
            lhs: dict[tuple[int, int], Scalar] = {}
            rhs: dict[tuple[int, int], Scalar] = {}
            for a1, a2, ca in coalg.comul[a]:
                for b1, b2, cb in coalg.comul[b]:
                    tens2_add_scaled(lhs, left.act[a1][b1], right.act[a2][b2], ca * cb)
                    tens2_add_scaled(rhs, left.act[a2][b2], right.act[a1][b1], ca * cb)
            ch.compare((a, b), lhs, rhs, pairs_text)
    rep.add(ch.entry())
    return rep


def posthopf_equal(a: YDPostHopf, b: YDPostHopf) -> bool:
    """Tensor-exact equality of carrier, action and beta."""
    return (
        a.carrier.algebra.mul == b.carrier.algebra.mul
        and a.carrier.algebra.unit == b.carrier.algebra.unit
        and a.carrier.coalgebra.comul == b.carrier.coalgebra.comul
        and a.carrier.coalgebra.counit == b.carrier.coalgebra.counit
        and a.carrier.s_map == b.carrier.s_map
        and a.action.act == b.action.act
        and (a.beta is None) == (b.beta is None)
        and (a.beta is None or a.beta.act == b.beta.act)
    )


def brace_equal(a: YDBrace, b: YDBrace) -> bool:
    return (
        a.dot_side.algebra.mul == b.dot_side.algebra.mul
        and a.dot_side.s_map == b.dot_side.s_map
        and a.dot_side.coalgebra == b.dot_side.coalgebra
        and a.bullet_side.algebra.mul == b.bullet_side.algebra.mul
        and a.bullet_side.antipode == b.bullet_side.antipode
    )


def matched_pair_equal(a: MatchedPair, b: MatchedPair) -> bool:
    return (
        a.hopf.algebra.mul == b.hopf.algebra.mul
        and a.hopf.antipode == b.hopf.antipode
        and a.hopf.coalgebra == b.hopf.coalgebra
        and a.left_action.act == b.left_action.act
        and a.right_action.act == b.right_action.act
    )
