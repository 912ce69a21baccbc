"""Yetter-Drinfeld relative (pre-)Rota-Baxter operators.

An operator is a coalgebra morphism R: K -> H from a braided bimonoid K
into a Hopf algebra H, satisfying R(a).R(b) = R(a_1 . (R(a_2) >- b)), a
two-sided tensor symmetry, and (for the full notion) bijectivity plus the
inverse-side identity.  The module also houses the functors between these
operators and post-Hopf structures, the induced antipode on K, restriction
to group-likes and primitives, and the plain group/Lie weight-1 checkers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import FieldSpec, Scalar
from .hopf import (
    ActionTensor,
    AlgebraData,
    BraidedPair,
    CoalgebraData,
    HopfData,
    StructureError,
    check_algebra,
    check_coalgebra,
    check_hopf,
    solve_antipode,
    tens2_add_scaled,
)
from .linalg import (
    Matrix,
    Vector,
    add_scaled_inplace,
    identity_matrix,
    invert,
    kernel,
    matrix_from_columns,
    solve,
    unit_vector,
)
from .posthopf import (
    PostLieData,
    YDPostHopf,
    check_post_lie,
    ensure_beta,
    left_coaction_adl,
    primitives,
    subadjacent_hopf,
)
from .report import (
    FAIL,
    PASS,
    Checker,
    CheckEntry,
    CheckReport,
    Witness,
    pairs_text,
    skipped_entry,
    vector_text,
)


@dataclass
class RelRB:
    """R: K -> H with the acting Hopf algebra H and braided carrier K."""

    h: HopfData
    k_alg: AlgebraData
    k_coalg: CoalgebraData
    k_antipode: Matrix | None
    action: ActionTensor            # act[i][j] = e_i^H >- e_j^K
    coaction: Matrix | None         # K -> H (x) K, (p*dimK + q, a)
    r_map: Matrix                   # K -> H
    params: dict[str, Scalar] = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.k_alg.dim != self.k_coalg.dim:
            raise StructureError("carrier algebra/coalgebra dimension mismatch")
        if self.action.acting_dim != self.h.dim or self.action.target_dim != self.k_alg.dim:
            raise StructureError("action shape mismatch")
        if self.r_map.rows != self.h.dim or self.r_map.cols != self.k_alg.dim:
            raise StructureError("r_map shape mismatch")
        if self.coaction is not None and (
            self.coaction.rows != self.h.dim * self.k_alg.dim
            or self.coaction.cols != self.k_alg.dim
        ):
            raise StructureError("coaction shape mismatch")

    @property
    def dim_k(self) -> int:
        return self.k_alg.dim

    @property
    def field(self) -> FieldSpec:
        return self.k_alg.field


def derived_coaction(r: RelRB) -> Matrix:
    """rho(a) = R(a_1) . S_H(R(a_3)) (x) a_2, the coaction both subcategories use."""
    dk, dh = r.dim_k, r.h.dim
    fs = r.field
    halg = r.h.algebra
    smap = r.h.antipode
    entries: dict[tuple[int, int], Scalar] = {}
    for a in range(dk):
        for (a1, a2, a3), c in r.k_coalg.legs(a, 3):
            u = halg.mul_vec(r.r_map.column(a1), smap.apply(r.r_map.column(a3)))
            for p, cp in u.entries.items():
                key = (p * dk + a2, a)
                v = entries.get(key)
                v = c * cp if v is None else v + c * cp
                if v:
                    entries[key] = v
                else:
                    del entries[key]
    return Matrix(dh * dk, dk, entries, fs)


def effective_coaction(r: RelRB) -> Matrix:
    return r.coaction if r.coaction is not None else derived_coaction(r)


def _coact_terms(rho: Matrix, dk: int, a: int):
    out = []
    for p, c in rho.column(a).entries.items():
        out.append((p // dk, p % dk, c))
    return sorted(out)


def check_rel_rb(r: RelRB, mode: str = "pre") -> CheckReport:
    """RB-SPACES, RB-COALG, RB-1, RB-2, RB-BIMON (+ RB-3 in full mode)."""
    if mode not in ("pre", "full"):
        raise StructureError(f"unknown mode {mode!r}")
    dk, dh = r.dim_k, r.h.dim
    fs = r.field
    halg, hco = r.h.algebra, r.h.coalgebra
    kalg, kco = r.k_alg, r.k_coalg
    act = r.action
    rmap = r.r_map
    rho = effective_coaction(r)
    rep = CheckReport()

    sub = check_hopf(r.h)
    sub_k = check_algebra(kalg)
    sub_k.extend(check_coalgebra(kco))
    if sub.all_pass() and sub_k.all_pass():
        rep.add(CheckEntry("RB-SPACES", PASS,
                           checked=sum(e.checked for e in sub.entries + sub_k.entries)))
    else:
        first = (sub.failed() + sub_k.failed())[0]
        rep.add(CheckEntry("RB-SPACES", FAIL,
                           Witness((first.axiom,) + first.witness.where,
                                   first.witness.lhs, first.witness.rhs)))

    # RB-COALG: R is a coalgebra morphism and R(1_K) = 1_H
    ch = Checker("RB-COALG")
    for a in range(dk):
        lhs = hco.comul_vec(rmap.column(a))
        rhs: dict[tuple[int, int], Scalar] = {}
        for a1, a2, c in kco.comul[a]:
            tens2_add_scaled(rhs, rmap.column(a1), rmap.column(a2), c)
        ch.compare((a, 0), lhs, rhs, pairs_text)
        ch.compare((a, 1), hco.eps_vec(rmap.column(a)), kco.eps(a))
    ch.compare((dk,), rmap.apply(kalg.unit), halg.unit, vector_text)
    rep.add(ch.entry())

    # RB-1: R(a) . R(b) = R(a_1 . (R(a_2) >- b))
    ch = Checker("RB-1")
    for a in range(dk):
        legs = kco.comul[a]
        for b in range(dk):
            lhs = halg.mul_vec(rmap.column(a), rmap.column(b))
            acc: dict[int, Scalar] = {}
            for a1, a2, c in legs:
                w = act.apply(rmap.column(a2), unit_vector(dk, b, fs))
                add_scaled_inplace(acc, kalg.mul_basis_vec(a1, w), c)
            ch.compare((a, b), lhs, rmap.apply(Vector(dk, acc, fs)), vector_text)
    rep.add(ch.entry())

    # RB-2: S_H R(R(a_1) >- b_1) . R(a_2) . R(b_2) (x) R(R(a_3) >- b_3),
    # symmetric under moving the legs (1,2,3) -> (2,3,1)
    ch = Checker("RB-2")
    smap = r.h.antipode

    def rb2_term(a_legs, b_legs):
        (ai, aj, ak), (bi, bj, bk) = a_legs, b_legs
        w1 = act.apply(rmap.column(ai), unit_vector(dk, bi, fs))
        u = smap.apply(rmap.apply(w1))
        u = halg.mul_vec(u, rmap.column(aj))
        u = halg.mul_vec(u, rmap.column(bj))
        w3 = act.apply(rmap.column(ak), unit_vector(dk, bk, fs))
        return u, rmap.apply(w3)

    for a in range(dk):
        legs_a = kco.legs(a, 3)
        for b in range(dk):
            legs_b = kco.legs(b, 3)
            lhs: dict[tuple[int, int], Scalar] = {}
            rhs: dict[tuple[int, int], Scalar] = {}
            for (a1, a2, a3), ca in legs_a:
                for (b1, b2, b3), cb in legs_b:
                    u, v = rb2_term((a1, a2, a3), (b1, b2, b3))
                    tens2_add_scaled(lhs, u, v, ca * cb)
                    u, v = rb2_term((a2, a3, a1), (b2, b3, b1))
                    tens2_add_scaled(rhs, u, v, ca * cb)
            ch.compare((a, b), lhs, rhs, pairs_text)
    rep.add(ch.entry())

    rep.add(_bimonoid_checker(r, rho).entry())

    if mode == "full":
        rinv = invert(rmap)
        if rinv is None:
            rep.add(CheckEntry("RB-3", FAIL, Witness((0,), "not bijective", "R invertible")))
            return rep
        ch = Checker("RB-3")
        for a in range(dh):
            acc: dict[int, Scalar] = {}
            for (a1, a2, a3), c in hco.legs(a, 3):
                w = act.apply_basis(a1, rinv.apply(smap.column(a2)))
                add_scaled_inplace(acc, kalg.mul_vec(w, rinv.column(a3)), c)
            ch.compare((a,), Vector(dk, acc, fs), kalg.unit.scale(hco.eps(a)), vector_text)
        rep.add(ch.entry())
    return rep


def _bimonoid_checker(r: RelRB, rho: Matrix) -> Checker:
    """K is a bimonoid in Yetter-Drinfeld modules over H, condition by condition."""
    dk, dh = r.dim_k, r.h.dim
    fs = r.field
    halg, hco = r.h.algebra, r.h.coalgebra
    kalg, kco = r.k_alg, r.k_coalg
    act = r.action
    ch = Checker("RB-BIMON")

    # 1. module: (g.h) >- a = g >- (h >- a), 1 >- a = a
    for i in range(dh):
        for j in range(dh):
            w = halg.mul[i][j]
            for a in range(dk):
                lhs = act.apply(w, unit_vector(dk, a, fs))
                rhs = act.apply_basis(i, act.act[j][a])
                ch.compare((1, i, j, a), lhs, rhs, vector_text)
    for a in range(dk):
        ch.compare((1, dh, dh, a), act.apply(halg.unit, unit_vector(dk, a, fs)),
                   unit_vector(dk, a, fs), vector_text)

    # 2. module algebra: h >- (a.b) = (h_1 >- a).(h_2 >- b), h >- 1 = eps(h) 1
    for i in range(dh):
        legs = hco.comul[i]
        for a in range(dk):
            for b in range(dk):
                lhs = act.apply_basis(i, kalg.mul[a][b])
                acc: dict[int, Scalar] = {}
                for i1, i2, c in legs:
                    add_scaled_inplace(acc, kalg.mul_vec(act.act[i1][a], act.act[i2][b]), c)
                ch.compare((2, i, a, b), lhs, Vector(dk, acc, fs), vector_text)
        ch.compare((2, i, dk, dk), act.apply_basis(i, kalg.unit),
                   kalg.unit.scale(hco.eps(i)), vector_text)

    # 3. module coalgebra
    for i in range(dh):
        for a in range(dk):
            lhs = kco.comul_vec(act.act[i][a])
            rhs: dict[tuple[int, int], Scalar] = {}
            for i1, i2, ci in hco.comul[i]:
                for a1, a2, ca in kco.comul[a]:
                    tens2_add_scaled(rhs, act.act[i1][a1], act.act[i2][a2], ci * ca)
            ch.compare((3, i, a, 0), lhs, rhs, pairs_text)
            ch.compare((3, i, a, 1), kco.eps_vec(act.act[i][a]), hco.eps(i) * kco.eps(a))

    # 4. comodule: counit leg and coassociativity of the coaction
    for a in range(dk):
        terms = _coact_terms(rho, dk, a)
        acc: dict[int, Scalar] = {}
        for p, q, c in terms:
            e = hco.eps(p)
            if e:
                v = acc.get(q)
                v = c * e if v is None else v + c * e
                if v:
                    acc[q] = v
                else:
                    del acc[q]
        ch.compare((4, a, 0), Vector(dk, acc, fs), unit_vector(dk, a, fs), vector_text)
        lhs3: dict[tuple[int, int, int], Scalar] = {}
        rhs3: dict[tuple[int, int, int], Scalar] = {}
        for p, q, c in terms:
            for p1, p2, cp in hco.comul[p]:
                key = (p1, p2, q)
                v = lhs3.get(key)
                v = c * cp if v is None else v + c * cp
                if v:
                    lhs3[key] = v
                else:
                    del lhs3[key]
            for p2, q2, c2 in _coact_terms(rho, dk, q):
                key = (p, p2, q2)
                v = rhs3.get(key)
                v = c * c2 if v is None else v + c * c2
                if v:
                    rhs3[key] = v
                else:
                    del rhs3[key]
        ch.compare((4, a, 1), lhs3, rhs3, pairs_text)

    # 5. comodule algebra: rho(a.b) = a(-1) b(-1) (x) a(0) b(0), rho(1) = 1 (x) 1
    for a in range(dk):
        terms_a = _coact_terms(rho, dk, a)
        for b in range(dk):
            prod = kalg.mul[a][b]
            lhs: dict[tuple[int, int], Scalar] = {}
            for t, c in prod.entries.items():
                for p, q, cp in _coact_terms(rho, dk, t):
                    key = (p, q)
                    v = lhs.get(key)
                    v = c * cp if v is None else v + c * cp
                    if v:
                        lhs[key] = v
                    else:
                        del lhs[key]
            rhs: dict[tuple[int, int], Scalar] = {}
            for p1, q1, c1 in terms_a:
                for p2, q2, c2 in _coact_terms(rho, dk, b):
                    tens2_add_scaled(rhs, halg.mul[p1][p2], kalg.mul[q1][q2], c1 * c2)
            ch.compare((5, a, b), lhs, rhs, pairs_text)
    unit_rho: dict[tuple[int, int], Scalar] = {}
    for t, c in kalg.unit.entries.items():
        for p, q, cp in _coact_terms(rho, dk, t):
            unit_rho[(p, q)] = unit_rho.get((p, q), fs.zero) + c * cp
    unit_rho = {k: v for k, v in unit_rho.items() if v}
    expected_unit: dict[tuple[int, int], Scalar] = {}
    tens2_add_scaled(expected_unit, halg.unit, kalg.unit, fs.one)
    ch.compare((5, dk, dk), unit_rho, expected_unit, pairs_text)

    # 6. comodule coalgebra: Delta and eps are colinear
    for a in range(dk):
        lhs3 = {}
        for p, q, c in _coact_terms(rho, dk, a):
            for q1, q2, cq in kco.comul[q]:
                key = (p, q1, q2)
                v = lhs3.get(key)
                v = c * cq if v is None else v + c * cq
                if v:
                    lhs3[key] = v
                else:
                    del lhs3[key]
        rhs3 = {}
        for a1, a2, ca in kco.comul[a]:
            for p1, q1, c1 in _coact_terms(rho, dk, a1):
                for p2, q2, c2 in _coact_terms(rho, dk, a2):
                    w = halg.mul[p1][p2]
                    for hidx, hc in w.entries.items():
                        key = (hidx, q1, q2)
                        v = rhs3.get(key)
                        add = ca * c1 * c2 * hc
                        v = add if v is None else v + add
                        if v:
                            rhs3[key] = v
                        else:
                            del rhs3[key]
        ch.compare((6, a, 0), lhs3, rhs3, pairs_text)
        acc: dict[int, Scalar] = {}
        for p, q, c in _coact_terms(rho, dk, a):
            e = kco.eps(q)
            if e:
                v = acc.get(p)
                v = c * e if v is None else v + c * e
                if v:
                    acc[p] = v
                else:
                    del acc[p]
        ch.compare((6, a, 1), Vector(dh, acc, fs), halg.unit.scale(kco.eps(a)), vector_text)

    # 7. Yetter-Drinfeld compatibility:
    # rho(h >- a) = h_1 a(-1) S(h_3) (x) (h_2 >- a(0))
    smap = r.h.antipode
    for i in range(dh):
        legs_i = hco.legs(i, 3)
        for a in range(dk):
            w = act.act[i][a]
            lhs = {}
            for t, c in w.entries.items():
                for p, q, cp in _coact_terms(rho, dk, t):
                    key = (p, q)
                    v = lhs.get(key)
                    v = c * cp if v is None else v + c * cp
                    if v:
                        lhs[key] = v
                    else:
                        del lhs[key]
            rhs = {}
            for (i1, i2, i3), ci in legs_i:
                for p, q, cp in _coact_terms(rho, dk, a):
                    u = halg.mul_basis_vec(i1, unit_vector(dh, p, fs))
                    u = halg.mul_vec(u, smap.column(i3))
                    tens2_add_scaled(rhs, u, act.act[i2][q], ci * cp)
            ch.compare((7, i, a), lhs, rhs, pairs_text)

    # 8. braided bialgebra: Delta(a.b) = a_1 . (a_2(-1) >- b_1) (x) a_2(0) . b_2
    for a in range(dk):
        for b in range(dk):
            lhs = kco.comul_vec(kalg.mul[a][b])
            rhs = {}
            for a1, a2, ca in kco.comul[a]:
                for b1, b2, cb in kco.comul[b]:
                    for p, q, cp in _coact_terms(rho, dk, a2):
                        w = act.apply_basis(p, unit_vector(dk, b1, fs))
                        u = kalg.mul_basis_vec(a1, w)
                        tens2_add_scaled(rhs, u, kalg.mul[q][b2], ca * cb * cp)
            ch.compare((8, a, b, 0), lhs, rhs, pairs_text)
            ch.compare((8, a, b, 1), kco.eps_vec(kalg.mul[a][b]), kco.eps(a) * kco.eps(b))
    udelta = kco.comul_vec(kalg.unit)
    utens: dict[tuple[int, int], Scalar] = {}
    tens2_add_scaled(utens, kalg.unit, kalg.unit, fs.one)
    ch.compare((8, dk, dk, 0), udelta, utens, pairs_text)
    return ch


def antipode_sk(r: RelRB) -> Matrix:
    """S_K(a) = R(a_1) >- R^{-1} S_H R(a_2); both antipode identities verified."""
    rinv = invert(r.r_map)
    if rinv is None:
        raise StructureError("R is not bijective; S_K needs the full notion")
    dk = r.dim_k
    fs = r.field
    smap = r.h.antipode
    cols = []
    for a in range(dk):
        acc: dict[int, Scalar] = {}
        for a1, a2, c in r.k_coalg.comul[a]:
            w = rinv.apply(smap.apply(r.r_map.column(a2)))
            add_scaled_inplace(acc, r.action.apply(r.r_map.column(a1), w), c)
        cols.append(Vector(dk, acc, fs))
    sk = matrix_from_columns(cols, fs)
    for a in range(dk):
        left: dict[int, Scalar] = {}
        right: dict[int, Scalar] = {}
        for a1, a2, c in r.k_coalg.comul[a]:
            add_scaled_inplace(left, r.k_alg.mul_vec(sk.column(a1), unit_vector(dk, a2, fs)), c)
            add_scaled_inplace(right, r.k_alg.mul_vec(unit_vector(dk, a1, fs), sk.column(a2)), c)
        target = r.k_alg.unit.scale(r.k_coalg.eps(a))
        if Vector(dk, left, fs) != target or Vector(dk, right, fs) != target:
            raise StructureError("derived S_K fails the antipode identities")
    return sk


def functor_l(s: YDPostHopf) -> RelRB:
    """Identity map H -> H_subadjacent as a relative Rota-Baxter operator."""
    ensure_beta(s)
    h = subadjacent_hopf(s, verify=False)
    return RelRB(
        h=h,
        k_alg=s.carrier.algebra,
        k_coalg=s.carrier.coalgebra,
        k_antipode=s.carrier.s_map,
        action=s.action,
        coaction=left_coaction_adl(s),
        r_map=identity_matrix(s.dim, s.field),
        params=dict(s.params),
    )


def functor_m(r: RelRB) -> YDPostHopf:
    """Transport the braided structure of K onto H along R (needs R bijective)."""
    rinv = invert(r.r_map)
    if rinv is None:
        raise StructureError("functor M needs a bijective R")
    dh = r.h.dim
    fs = r.field
    halg, hco = r.h.algebra, r.h.coalgebra
    smap = r.h.antipode
    mul = []
    for i in range(dh):
        row = []
        for j in range(dh):
            u = r.k_alg.mul_vec(rinv.column(i), rinv.column(j))
            row.append(r.r_map.apply(u))
        mul.append(row)
    alg = AlgebraData(dh, list(halg.basis_labels), mul, halg.unit, fs)
    cols = []
    for a in range(dh):
        acc: dict[int, Scalar] = {}
        for a1, a2, c in hco.comul[a]:
            w = r.action.apply_basis(a1, rinv.apply(smap.column(a2)))
            add_scaled_inplace(acc, r.r_map.apply(w), c)
        cols.append(Vector(dh, acc, fs))
    s_r = matrix_from_columns(cols, fs)
    act_rows = []
    for i in range(dh):
        row = [r.r_map.apply(r.action.apply_basis(i, rinv.column(j))) for j in range(dh)]
        act_rows.append(row)
    act_r = ActionTensor(dh, dh, act_rows, fs)
    beta_rows = []
    for i in range(dh):
        sv = smap.column(i)
        beta_rows.append([act_r.apply(sv, unit_vector(dh, j, fs)) for j in range(dh)])
    carrier = BraidedPair(alg, hco, s_r)
    return YDPostHopf(carrier, act_r, ActionTensor(dh, dh, beta_rows, fs),
                      params=dict(r.params))


def functor_r(r: RelRB, mode: str = "D") -> YDPostHopf:
    """Post-Hopf structure on K with a >-_R b = R(a) >- b."""
    if mode not in ("D", "Cprime"):
        raise StructureError(f"unknown mode {mode!r}")
    dk = r.dim_k
    fs = r.field
    if mode == "D":
        if invert(r.r_map) is None:
            raise StructureError("mode D needs a bijective R")
        s_k = r.k_antipode if r.k_antipode is not None else antipode_sk(r)
    else:
        if kernel(r.r_map):
            raise StructureError("mode Cprime needs an injective R")
        s_k = r.k_antipode
        if s_k is None:
            s_k = solve_antipode(r.k_alg, r.k_coalg)
            if s_k is None:
                raise StructureError("carrier has no braided antipode")
    act_rows = []
    for i in range(dk):
        rv = r.r_map.column(i)
        act_rows.append([r.action.apply(rv, unit_vector(dk, j, fs)) for j in range(dk)])
    act_r = ActionTensor(dk, dk, act_rows, fs)
    beta_rows = []
    smap = r.h.antipode
    for i in range(dk):
        w = smap.apply(r.r_map.column(i))
        beta_rows.append([r.action.apply(w, unit_vector(dk, j, fs)) for j in range(dk)])
    carrier = BraidedPair(r.k_alg, r.k_coalg, s_k)
    return YDPostHopf(carrier, act_r, ActionTensor(dk, dk, beta_rows, fs),
                      params=dict(r.params))


def _morphism_checker(
    axiom: str,
    f: Matrix,
    alg_src: AlgebraData,
    co_src: CoalgebraData,
    alg_dst: AlgebraData,
    co_dst: CoalgebraData,
) -> Checker:
    ch = Checker(axiom)
    d = alg_src.dim
    for i in range(d):
        for j in range(d):
            lhs = f.apply(alg_src.mul[i][j])
            rhs = alg_dst.mul_vec(f.column(i), f.column(j))
            ch.compare((0, i, j), lhs, rhs, vector_text)
    ch.compare((1,), f.apply(alg_src.unit), alg_dst.unit, vector_text)
    for i in range(d):
        lhs2 = co_dst.comul_vec(f.column(i))
        rhs2: dict[tuple[int, int], Scalar] = {}
        for j, k, c in co_src.comul[i]:
            tens2_add_scaled(rhs2, f.column(j), f.column(k), c)
        ch.compare((2, i), lhs2, rhs2, pairs_text)
        ch.compare((3, i), co_dst.eps_vec(f.column(i)), co_src.eps(i))
    return ch


def check_rb_morphism(src: RelRB, dst: RelRB, f: Matrix, g: Matrix) -> CheckReport:
    """(f, g) is a morphism: both maps are algebra+coalgebra morphisms,
    f R = R' g, and g intertwines the actions."""
    rep = CheckReport()
    rep.add(_morphism_checker("RBM-F", f, src.h.algebra, src.h.coalgebra,
                              dst.h.algebra, dst.h.coalgebra).entry())
    rep.add(_morphism_checker("RBM-G", g, src.k_alg, src.k_coalg,
                              dst.k_alg, dst.k_coalg).entry())
    ch = Checker("RBM-COMM")
    ch.compare((0,), f.compose(src.r_map), dst.r_map.compose(g),
               lambda m: pairs_text(m.entries))
    rep.add(ch.entry())
    ch = Checker("RBM-ACT")
    fs = src.field
    for i in range(src.h.dim):
        for a in range(src.dim_k):
            lhs = g.apply(src.action.act[i][a])
            rhs = dst.action.apply(f.column(i), g.column(a))
            ch.compare((i, a), lhs, rhs, vector_text)
    rep.add(ch.entry())
    return rep


def is_posthopf_morphism(src: YDPostHopf, dst: YDPostHopf, g: Matrix) -> bool:
    """g preserves product, unit, coproduct, counit and the action."""
    ch = _morphism_checker("RBM-G", g, src.carrier.algebra, src.carrier.coalgebra,
                           dst.carrier.algebra, dst.carrier.coalgebra)
    if ch.failures:
        return False
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = g.apply(src.action.act[i][j])
            rhs = dst.action.apply(g.column(i), g.column(j))
            if lhs != rhs:
                return False
    return True


def adjunction_bijection(rb: RelRB, s: YDPostHopf, f: Matrix | None = None,
                         g: Matrix | None = None, direction: str = "forward"):
    """Hom(L(s), rb) <-> Hom(s, R'(rb)): forward maps (f, g) to g, backward
    maps g to (R o g, g).  The input morphism is validated first."""
    if direction == "forward":
        if f is None or g is None:
            raise StructureError("forward direction needs the pair (f, g)")
        ls = functor_l(s)
        rep = check_rb_morphism(ls, rb, f, g)
        if not rep.all_pass():
            bad = ", ".join(e.axiom for e in rep.failed())
            raise StructureError(f"(f, g) is not a morphism of operators: {bad}")
        return g
    if direction == "backward":
        if g is None:
            raise StructureError("backward direction needs g")
        target = functor_r(rb, "Cprime")
        if not is_posthopf_morphism(s, target, g):
            raise StructureError("g is not a morphism into the induced structure")
        return rb.r_map.compose(g), g
    raise StructureError(f"unknown direction {direction!r}")


# --- groups, Lie algebras, restrictions ------------------------------------


@dataclass
class GroupTable:
    """Finite group as a multiplication table over element indices."""

    elements: list[str]
    mul: list[list[int]]

    def __post_init__(self):
        n = len(self.elements)
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise StructureError("group table shape mismatch")

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> int | None:
        n = self.order
        for e in range(n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(n)):
                return e
        return None

    def inverse(self, i: int) -> int | None:
        e = self.identity()
        if e is None:
            return None
        for j in range(self.order):
            if self.mul[i][j] == e and self.mul[j][i] == e:
                return j
        return None


@dataclass
class GroupRB:
    """R: H -> G with phi: G -> Aut(H); weight-1 law
    R(h) R(k) = R(h . phi(R(h)) k)."""

    group_g: GroupTable
    group_h: GroupTable
    phi: list[list[int]]            # phi[g][h] = index of phi(g)(h)
    r: list[int]                    # r[h] = index of R(h) in G

    def __post_init__(self):
        if len(self.phi) != self.group_g.order:
            raise StructureError("phi must have one row per element of G")
        if any(len(row) != self.group_h.order for row in self.phi):
            raise StructureError("phi row length mismatch")
        if len(self.r) != self.group_h.order:
            raise StructureError("r must list an image for every element of H")


def _group_checker(axiom: str, g: GroupTable) -> Checker:
    ch = Checker(axiom)
    n = g.order
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ch.record((i, j, k), g.mul[g.mul[i][j]][k] == g.mul[i][g.mul[j][k]],
                          "associativity", "")
    e = g.identity()
    ch.record(("identity",), e is not None, "no identity", "")
    if e is not None:
        for i in range(n):
            ch.record(("inverse", i), g.inverse(i) is not None, "no inverse", "")
    return ch


def check_group_rb(grb: GroupRB) -> CheckReport:
    """Group well-formedness, phi a homomorphism into Aut(H), weight-1 law."""
    rep = CheckReport()
    rep.add(_group_checker("GRB-GROUP-G", grb.group_g).entry())
    rep.add(_group_checker("GRB-GROUP-H", grb.group_h).entry())
    g, h = grb.group_g, grb.group_h
    ch = Checker("GRB-ACTION")
    eg = g.identity()
    for gi in range(g.order):
        row = grb.phi[gi]
        ch.record((gi, "bijective"), sorted(row) == list(range(h.order)), "not a bijection", "")
        for x in range(h.order):
            for y in range(h.order):
                ch.record((gi, x, y), row[h.mul[x][y]] == h.mul[row[x]][row[y]],
                          "not multiplicative", "")
    for g1 in range(g.order):
        for g2 in range(g.order):
            comp = [grb.phi[g1][grb.phi[g2][x]] for x in range(h.order)]
            ch.record(("hom", g1, g2), grb.phi[g.mul[g1][g2]] == comp, "phi not a homomorphism", "")
    if eg is not None:
        ch.record(("unit",), grb.phi[eg] == list(range(h.order)), "phi(e) is not the identity", "")
    rep.add(ch.entry())
    ch = Checker("GRB-W1")
    for x in range(h.order):
        rx = grb.r[x]
        for y in range(h.order):
            lhs = g.mul[rx][grb.r[y]]
            rhs = grb.r[h.mul[x][grb.phi[rx][y]]]
            ch.record((x, y), lhs == rhs, str(lhs), str(rhs))
    rep.add(ch.entry())
    return rep


@dataclass
class LieData:
    """Lie algebra by structure constants."""

    dim: int
    bracket: list[list[Vector]]
    field: FieldSpec

    def bracket_vec(self, u: Vector, v: Vector) -> Vector:
        acc: dict[int, Scalar] = {}
        for i, a in u.entries.items():
            for j, b in v.entries.items():
                add_scaled_inplace(acc, self.bracket[i][j], a * b)
        return Vector(self.dim, acc, self.field)


@dataclass
class LieRB:
    """Linear R: h -> g with phi: g -> Der(h); weight-1 law
    [R(x), R(y)] = R(phi(R x) y - phi(R y) x + [x, y])."""

    lie_g: LieData
    lie_h: LieData
    phi: ActionTensor               # phi[i][j] = phi(g_i)(h_j)
    r: Matrix                       # h -> g

    def __post_init__(self):
        if self.phi.acting_dim != self.lie_g.dim or self.phi.target_dim != self.lie_h.dim:
            raise StructureError("phi shape mismatch")
        if self.r.rows != self.lie_g.dim or self.r.cols != self.lie_h.dim:
            raise StructureError("r shape mismatch")


def _lie_checker(axiom: str, lie: LieData) -> Checker:
    ch = Checker(axiom)
    d = lie.dim
    fs = lie.field
    for i in range(d):
        for j in range(d):
            ch.compare((0, i, j), lie.bracket[i][j], lie.bracket[j][i].neg(), vector_text)
            for k in range(d):
                total = lie.bracket_vec(unit_vector(d, i, fs), lie.bracket[j][k])
                total = total.add(lie.bracket_vec(unit_vector(d, j, fs), lie.bracket[k][i]))
                total = total.add(lie.bracket_vec(unit_vector(d, k, fs), lie.bracket[i][j]))
                ch.compare((1, i, j, k), total, Vector(d, {}, fs), vector_text)
    return ch


def check_lie_rb(l: LieRB) -> CheckReport:
    """Lie axioms, phi an action by derivations, weight-1 law, induced post-Lie."""
    rep = CheckReport()
    rep.add(_lie_checker("LRB-LIE-G", l.lie_g).entry())
    rep.add(_lie_checker("LRB-LIE-H", l.lie_h).entry())
    dg, dh = l.lie_g.dim, l.lie_h.dim
    fs = l.lie_h.field
    ch = Checker("LRB-ACTION")
    for i in range(dg):
        for a in range(dh):
            for b in range(dh):
                lhs = l.phi.apply_basis(i, l.lie_h.bracket[a][b])
                rhs = l.lie_h.bracket_vec(l.phi.act[i][a], unit_vector(dh, b, fs)).add(
                    l.lie_h.bracket_vec(unit_vector(dh, a, fs), l.phi.act[i][b])
                )
                ch.compare((0, i, a, b), lhs, rhs, vector_text)
    for i in range(dg):
        for j in range(dg):
            for a in range(dh):
                lhs = l.phi.apply(l.lie_g.bracket[i][j], unit_vector(dh, a, fs))
                rhs = l.phi.apply_basis(i, l.phi.act[j][a]).sub(
                    l.phi.apply_basis(j, l.phi.act[i][a])
                )
                ch.compare((1, i, j, a), lhs, rhs, vector_text)
    rep.add(ch.entry())
    ch = Checker("LRB-W1")
    for a in range(dh):
        for b in range(dh):
            lhs = l.lie_g.bracket_vec(l.r.column(a), l.r.column(b))
            inner = l.phi.apply(l.r.column(a), unit_vector(dh, b, fs)).sub(
                l.phi.apply(l.r.column(b), unit_vector(dh, a, fs))
            ).add(l.lie_h.bracket[a][b])
            ch.compare((a, b), lhs, l.r.apply(inner), vector_text)
    rep.add(ch.entry())
    # induced post-Lie structure x >- y := phi(R(x)) y on the domain
    action = [
        [l.phi.apply(l.r.column(i), unit_vector(dh, j, fs)) for j in range(dh)]
        for i in range(dh)
    ]
    pl = PostLieData(dh, [list(row) for row in l.lie_h.bracket], action, fs)
    sub = check_post_lie(pl)
    if sub.all_pass():
        rep.add(CheckEntry("LRB-POSTLIE", PASS, checked=sum(e.checked for e in sub.entries)))
    else:
        first = sub.failed()[0]
        rep.add(CheckEntry("LRB-POSTLIE", FAIL,
                           Witness((first.axiom,) + first.witness.where,
                                   first.witness.lhs, first.witness.rhs)))
    return rep


def restrict_to_grouplikes(r: RelRB, candidates: list[Vector]) -> GroupRB:
    """Verify the candidates are group-like and closed, then build the
    finite weight-1 operator on them."""
    dk = r.dim_k
    fs = r.field
    kco, kalg = r.k_coalg, r.k_alg
    for v in candidates:
        expected: dict[tuple[int, int], Scalar] = {}
        tens2_add_scaled(expected, v, v, fs.one)
        if kco.comul_vec(v) != expected or kco.eps_vec(v) != fs.one:
            raise StructureError(f"candidate {vector_text(v)} is not group-like")

    def index_of(vec: Vector, pool: list[Vector], what: str) -> int:
        for i, w in enumerate(pool):
            if w == vec:
                return i
        raise StructureError(f"{what} not closed: {vector_text(vec)} missing")

    def label_for(v: Vector, labels: list[str], fallback: str) -> str:
        if len(v.entries) == 1:
            (i, c), = v.entries.items()
            if c == fs.one:
                return labels[i]
        return fallback

    h_elems = candidates
    h_mul = [
        [index_of(kalg.mul_vec(x, y), h_elems, "candidate set under the product")
         for y in h_elems]
        for x in h_elems
    ]
    h_labels = [label_for(v, kalg.basis_labels, f"h{i}") for i, v in enumerate(h_elems)]
    g_elems: list[Vector] = []
    r_idx: list[int] = []
    for v in h_elems:
        img = r.r_map.apply(v)
        for i, w in enumerate(g_elems):
            if w == img:
                r_idx.append(i)
                break
        else:
            g_elems.append(img)
            r_idx.append(len(g_elems) - 1)
    halg = r.h.algebra
    g_mul = [
        [index_of(halg.mul_vec(x, y), g_elems, "image set under the product")
         for y in g_elems]
        for x in g_elems
    ]
    g_labels = [label_for(v, halg.basis_labels, f"g{i}") for i, v in enumerate(g_elems)]
    phi = [
        [index_of(r.action.apply(g, h), h_elems, "candidate set under the action")
         for h in h_elems]
        for g in g_elems
    ]
    grb = GroupRB(GroupTable(g_labels, g_mul), GroupTable(h_labels, h_mul), phi, r_idx)
    rep = check_group_rb(grb)
    if not rep.all_pass():
        bad = ", ".join(e.axiom for e in rep.failed())
        raise StructureError(f"restricted group operator fails: {bad}")
    return grb


def restrict_to_primitives(r: RelRB) -> LieRB:
    """Weight-1 operator between the Lie algebras of primitive elements."""
    fs = r.field
    p_k = primitives(r.k_coalg, r.k_alg.unit)
    p_h = primitives(r.h.coalgebra, r.h.algebra.unit)

    def coords(pool: list[Vector], v: Vector, what: str) -> Vector:
        if not pool:
            if v.is_zero():
                return Vector(0, {}, fs)
            raise StructureError(f"{what}: nonzero vector outside the zero space")
        res = solve(matrix_from_columns(pool, fs), v)
        if res.solution is None:
            raise StructureError(f"{what}: not closed under the restriction")
        return res.solution

    def bracket_of(pool: list[Vector], alg: AlgebraData) -> LieData:
        n = len(pool)
        rows = []
        for i in range(n):
            rows.append([
                coords(pool, alg.mul_vec(pool[i], pool[j]).sub(alg.mul_vec(pool[j], pool[i])),
                       "commutator bracket")
                for j in range(n)
            ])
        return LieData(n, rows, fs)

    lie_h = bracket_of(p_k, r.k_alg)
    lie_g = bracket_of(p_h, r.h.algebra)
    phi_rows = [
        [coords(p_k, r.action.apply(p_h[i], p_k[j]), "primitive action") for j in range(len(p_k))]
        for i in range(len(p_h))
    ]
    phi = ActionTensor(len(p_h), len(p_k), phi_rows, fs)
    r_cols = [coords(p_h, r.r_map.apply(v), "image of a primitive") for v in p_k]
    rmat = Matrix(
        len(p_h), len(p_k),
        {(i, j): c for j, col in enumerate(r_cols) for i, c in col.entries.items()},
        fs,
    )
    lrb = LieRB(lie_g, lie_h, phi, rmat)
    rep = check_lie_rb(lrb)
    if not rep.all_pass():
        bad = ", ".join(e.axiom for e in rep.failed())
        raise StructureError(f"restricted Lie operator fails: {bad}")
    return lrb
