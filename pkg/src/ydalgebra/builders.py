"""Built-in example structures as exact structure-constant data.

Each builder assembles its tables from generator data (finite monomial
rewriting with a canonical monomial order, action extension along the
structural identities, antipodes solved from their convolution systems)
and then runs the full axiom suite on the result before returning it --
builders are self-certifying, nothing is assumed confluent or consistent.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .field import FieldSpec, RATIONALS, Scalar, inv as scalar_inv
from .hopf import (
    ActionTensor,
    AlgebraData,
    BraidedPair,
    CoalgebraData,
    HopfData,
    StructureError,
    solve_antipode,
)
from .linalg import Matrix, Vector, add_scaled_inplace, matrix_from_columns, unit_vector
from .posthopf import YDPostHopf, bullet_algebra, check_yd_post_hopf
from .rota import GroupRB, GroupTable, check_group_rb


def _coerce(field: FieldSpec, x) -> Scalar:
    if isinstance(x, int):
        return field.scalar(x)
    if isinstance(x, Fraction) and field.p is not None:
        return field.scalar(x.numerator, x.denominator)
    if field.contains(x):
        return x
    raise StructureError(f"scalar {x!r} does not live in the requested field")


def _certify(s: YDPostHopf, name: str) -> YDPostHopf:
    rep = check_yd_post_hopf(s)
    if not rep.all_pass():
        raise StructureError(f"builder {name} produced an invalid structure:\n{rep.text()}")
    return s


# --- generic coproduct induction -------------------------------------------


def _gen_legs4(gen_delta, u, fs):
    """Four-legged coproduct of a generator, expanded inside the generator set."""
    legs = [((u,), fs.one)]
    for _ in range(3):
        acc = {}
        for tup, s in legs:
            for p, q, c in gen_delta[tup[0]]:
                key = (p, q) + tup[1:]
                v = acc.get(key)
                v = s * c if v is None else v + s * c
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        legs = sorted(acc.items())
    return legs


def _delta_by_induction(dim, gen_delta, peel, alpha_gen, beta_gen, mul_pair, fs):
    """Extend the coproduct from generators to all monomials through the
    braided compatibility of the coproduct with the product.

    gen_delta: coproduct of the unit and each generator, by index.
    peel: index -> (generator index, tail index) for every other monomial.
    alpha_gen / beta_gen: full action rows of the unit and the generators.
    """
    legs4_cache = {u: _gen_legs4(gen_delta, u, fs) for u in gen_delta}
    delta: list[dict[tuple[int, int], Scalar] | None] = [None] * dim

    def tens_add(acc, u_vec: Vector, v_vec: Vector, s: Scalar):
        for i, a in u_vec.entries.items():
            sa = a * s
            for j, b in v_vec.entries.items():
                key = (i, j)
                t = acc.get(key)
                t = sa * b if t is None else t + sa * b
                if t:
                    acc[key] = t
                else:
                    del acc[key]

    for m in range(dim):
        if m in gen_delta:
            delta[m] = {(p, q): c for p, q, c in gen_delta[m]}
            continue
        u, w = peel[m]
        dw = delta[w]
        if dw is None:
            raise StructureError("peel order must follow the basis order")
        acc: dict[tuple[int, int], Scalar] = {}
        for (l1, l2, l3, l4), s in legs4_cache[u]:
            for (p, q), c in dw.items():
                v = beta_gen[l4][p]
                v2_acc: dict[int, Scalar] = {}
                for t, ct in v.entries.items():
                    add_scaled_inplace(v2_acc, alpha_gen[l2][t], ct)
                left_acc: dict[int, Scalar] = {}
                for t, ct in v2_acc.items():
                    add_scaled_inplace(left_acc, mul_pair(l1, t), ct)
                tens_add(acc, Vector(dim, left_acc, fs), mul_pair(l3, q), s * c)
        delta[m] = acc
    return [sorted((p, q, c) for (p, q), c in d.items()) for d in delta]


# --- E(n) family (Sweedler is n = 1) ----------------------------------------


def build_en(n: int, a_matrix, field: FieldSpec = RATIONALS) -> YDPostHopf:
    """Braided carrier on g, x_1..x_n with g.g = 1, x_i.g = g.x_i and
    x_i.x_j + x_j.x_i = 2 A_ij (1 - g), action extended from the generator
    diagram; dimension 2^(n+1)."""
    if field.characteristic == 2:
        raise StructureError("these structures need characteristic not 2")
    if n < 1:
        raise StructureError("n must be at least 1")
    A = [[_coerce(field, a_matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise StructureError("the coefficient matrix must be symmetric")
    fs = field
    one = fs.one
    basis: list[tuple[int, tuple[int, ...]]] = []
    for size in range(n + 1):
        for sub in combinations(range(1, n + 1), size):
            for g_exp in (0, 1):
                basis.append((g_exp, sub))
    dim = len(basis)
    index = {key: i for i, key in enumerate(basis)}

    def gen_name(i: int) -> str:
        return "x" if n == 1 else f"x{i}"

    def label(key) -> str:
        g_exp, sub = key
        parts = (["g"] if g_exp else []) + [gen_name(i) for i in sub]
        return "*".join(parts) if parts else "1"

    labels = [label(key) for key in basis]
    g_idx = index[(1, ())]
    x_idx = {i: index[(0, (i,))] for i in range(1, n + 1)}

    def reduce_word(g_exp: int, word: tuple[int, ...], coeff: Scalar, out: dict):
        for t in range(len(word) - 1):
            i, j = word[t], word[t + 1]
            if i < j:
                continue
            pre, post = word[:t], word[t + 2:]
            aij = A[i - 1][j - 1]
            if i == j:
                if aij:
                    reduce_word(g_exp, pre + post, coeff * aij, out)
                    reduce_word(g_exp + 1, pre + post, -(coeff * aij), out)
                return
            reduce_word(g_exp, pre + (j, i) + post, -coeff, out)
            if aij:
                two = coeff * aij * fs.scalar(2)
                reduce_word(g_exp, pre + post, two, out)
                reduce_word(g_exp + 1, pre + post, -two, out)
            return
        key = (g_exp % 2, word)
        v = out.get(key)
        v = coeff if v is None else v + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    mul_cache: dict[tuple[int, int], Vector] = {}

    def mul_pair(m1: int, m2: int) -> Vector:
        got = mul_cache.get((m1, m2))
        if got is None:
            (a1, s1), (a2, s2) = basis[m1], basis[m2]
            out: dict = {}
            reduce_word(a1 + a2, s1 + s2, one, out)
            got = Vector(dim, {index[key]: c for key, c in out.items()}, fs)
            mul_cache[(m1, m2)] = got
        return got

    def mul_by(m: int, v: Vector) -> Vector:
        acc: dict[int, Scalar] = {}
        for t, c in v.entries.items():
            add_scaled_inplace(acc, mul_pair(m, t), c)
        return Vector(dim, acc, fs)

    def alpha_g_vec(v: Vector) -> Vector:
        out = {}
        for t, c in v.entries.items():
            sign = -c if len(basis[t][1]) % 2 else c
            out[t] = sign
        return Vector(dim, out, fs)

    act_xi_cache: dict[tuple[int, int], Vector] = {}

    def act_xi(i: int, m: int) -> Vector:
        got = act_xi_cache.get((i, m))
        if got is not None:
            return got
        g_exp, sub = basis[m]
        if g_exp == 1:
            res = mul_by(g_idx, act_xi(i, index[(0, sub)]))
        elif not sub:
            res = Vector(dim, {}, fs)
        else:
            j, rest = sub[0], sub[1:]
            aij = A[i - 1][j - 1]
            if not rest:
                res = Vector(dim, {0: aij, g_idx: -aij}, fs)
            else:
                w_lo, w_hi = index[(0, rest)], index[(1, rest)]
                res = Vector(dim, {w_lo: aij, w_hi: -aij}, fs)
                res = res.add(mul_by(x_idx[j], act_xi(i, index[(0, rest)])).neg())
        act_xi_cache[(i, m)] = res
        return res

    beta_xi_cache: dict[tuple[int, int], Vector] = {}

    def beta_xi(i: int, m: int) -> Vector:
        got = beta_xi_cache.get((i, m))
        if got is not None:
            return got
        g_exp, sub = basis[m]
        if g_exp == 1:
            res = mul_by(g_idx, beta_xi(i, index[(0, sub)]))
        elif not sub:
            res = Vector(dim, {}, fs)
        else:
            j, rest = sub[0], sub[1:]
            aij = A[i - 1][j - 1]
            if not rest:
                res = Vector(dim, {g_idx: aij, 0: -aij}, fs)
            else:
                w = index[(0, rest)]
                sign_rest = -one if len(rest) % 2 else one
                t2_lo, t2_hi = index[(1, rest)], index[(0, rest)]
                res = mul_by(x_idx[j], beta_xi(i, w))
                corr = Vector(dim, {t2_lo: aij * sign_rest, t2_hi: -(aij * sign_rest)}, fs)
                res = res.add(corr)
        beta_xi_cache[(i, m)] = res
        return res

    # full action rows of the unit and the generators, for the coproduct induction
    alpha_gen: dict[int, list[Vector]] = {
        0: [unit_vector(dim, j, fs) for j in range(dim)],
        g_idx: [alpha_g_vec(unit_vector(dim, j, fs)) for j in range(dim)],
    }
    beta_gen: dict[int, list[Vector]] = {
        0: alpha_gen[0],
        g_idx: alpha_gen[g_idx],
    }
    for i in range(1, n + 1):
        alpha_gen[x_idx[i]] = [act_xi(i, j) for j in range(dim)]
        beta_gen[x_idx[i]] = [beta_xi(i, j) for j in range(dim)]

    gen_delta = {
        0: [(0, 0, one)],
        g_idx: [(g_idx, g_idx, one)],
    }
    for i in range(1, n + 1):
        gen_delta[x_idx[i]] = [(x_idx[i], 0, one), (g_idx, x_idx[i], one)]
    peel = {}
    for m, (g_exp, sub) in enumerate(basis):
        if m in gen_delta:
            continue
        if g_exp == 1:
            peel[m] = (g_idx, index[(0, sub)])
        else:
            peel[m] = (x_idx[sub[0]], index[(0, sub[1:])])
    comul = _delta_by_induction(dim, gen_delta, peel, alpha_gen, beta_gen, mul_pair, fs)

    counit = Vector(dim, {index[(a, ())]: one for a in (0, 1)}, fs)
    mul = [[mul_pair(i, j) for j in range(dim)] for i in range(dim)]
    alg = AlgebraData(dim, labels, mul, unit_vector(dim, 0, fs), fs)
    coalg = CoalgebraData(dim, comul, counit, fs)
    s_map = solve_antipode(alg, coalg)
    if s_map is None:
        raise StructureError("the braided antipode system is inconsistent")

    # full action rows for every basis monomial
    rows: list[list[Vector] | None] = [None] * dim

    def act_row(m: int) -> list[Vector]:
        got = rows[m]
        if got is not None:
            return got
        g_exp, sub = basis[m]
        if m in alpha_gen:
            res = alpha_gen[m]
        elif g_exp == 1:
            base = act_row(index[(0, sub)])
            sign = -one if len(sub) % 2 else one
            res = [alpha_g_vec(v).scale(sign) for v in base]
        else:
            i, rest = sub[0], sub[1:]
            w_idx = index[(0, rest)]
            wrow = act_row(w_idx)
            corr = mul_by(g_idx, act_xi(i, w_idx))
            res = []
            for j in range(dim):
                acc: dict[int, Scalar] = {}
                for t, ct in wrow[j].entries.items():
                    add_scaled_inplace(acc, act_xi(i, t), ct)
                for b, cb in corr.entries.items():
                    add_scaled_inplace(acc, act_row(b)[j], -cb)
                res.append(Vector(dim, acc, fs))
        rows[m] = res
        return res

    action = ActionTensor(dim, dim, [act_row(m) for m in range(dim)], fs)
    carrier = BraidedPair(alg, coalg, s_map)
    params = {"k": A[0][0]} if n == 1 else {
        f"A{i + 1}{j + 1}": A[i][j] for i in range(n) for j in range(n)
    }
    s = YDPostHopf(carrier, action, None, params=params)
    bullet = bullet_algebra(s)
    sharp = solve_antipode(bullet, coalg)
    if sharp is None:
        raise StructureError("the subadjacent antipode system is inconsistent")
    beta_rows = [
        [action.apply(sharp.column(m), unit_vector(dim, j, fs)) for j in range(dim)]
        for m in range(dim)
    ]
    s.beta = ActionTensor(dim, dim, beta_rows, fs)
    return _certify(s, f"en(n={n})")


def build_sweedler(k, field: FieldSpec = RATIONALS) -> YDPostHopf:
    """The four-dimensional braided carrier on 1, g, x, g*x with
    x.x = k(1-g); identical to build_en(1, [[k]])."""
    return build_en(1, [[k]], field)


# --- Suzuki family -----------------------------------------------------------

_SUZ_BASIS = [
    ("A", 0, 0),
    ("A", 1, 0), ("B", 1, 0), ("B", 0, 1), ("A", 0, 1),
    ("A", 2, 0), ("A", 1, 1), ("B", 2, 0), ("B", 1, 1),
    ("A", 3, 0), ("A", 2, 1), ("B", 3, 0), ("B", 2, 1),
    ("A", 4, 0), ("A", 3, 1), ("B", 3, 1),
]

_SUZ_LABELS = [
    "1", "a", "b", "c", "d",
    "a^2", "a*d", "b^2", "b*c",
    "a^3", "a^2*d", "b^3", "b^2*c",
    "a^4", "a^3*d", "b^3*c",
]


def build_suzuki(alpha, beta, field: FieldSpec = RATIONALS) -> YDPostHopf:
    """Closure of 1, a, b, c, d under a.a = d.d, c.c = (alpha/beta) b.b,
    the eight zero products and matrix-style coproduct; the antipode
    identity forces alpha^2 beta^2 a^4 + alpha^5 beta^{-1} b^4 = 1, which
    closes the monomial chains at dimension 16."""
    if field.characteristic == 2:
        raise StructureError("these structures need characteristic not 2")
    al = _coerce(field, alpha)
    be = _coerce(field, beta)
    if not al or not be:
        raise StructureError("both parameters must be invertible")
    fs = field
    one = fs.one
    al_i = scalar_inv(al)
    be_i = scalar_inv(be)
    qa = al_i * al_i * be_i * be_i              # a^5 = qa * a
    cb = al * be_i                              # c.c = cb * b.b
    b4_unit = al_i ** 2 * al_i ** 2 * al_i * be  # b^4 head coefficient on 1
    b4_a4 = -(al_i * al_i * al_i * be * be * be)  # and on a^4

    dim = len(_SUZ_BASIS)
    index = {key: i for i, key in enumerate(_SUZ_BASIS)}
    UNIT = index[("A", 0, 0)]
    A_ = index[("A", 1, 0)]
    B_ = index[("B", 1, 0)]
    C_ = index[("B", 0, 1)]
    D_ = index[("A", 0, 1)]
    A4 = index[("A", 4, 0)]

    def reduce_a(m: int, dd: int, coeff: Scalar, out: dict):
        while m >= 5 or (dd == 1 and m >= 4):
            m -= 4
            coeff = coeff * qa
        key = ("A", m, dd)
        v = out.get(key)
        v = coeff if v is None else v + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    def reduce_b(m: int, dd: int, coeff: Scalar, out: dict):
        if m >= 4:
            if m == 4 and dd == 0:
                k1 = ("A", 0, 0)
                v = out.get(k1)
                v = coeff * b4_unit if v is None else v + coeff * b4_unit
                if v:
                    out[k1] = v
                else:
                    out.pop(k1, None)
                k2 = ("A", 4, 0)
                v = out.get(k2)
                v = coeff * b4_a4 if v is None else v + coeff * b4_a4
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
                return
            # b^m c^dd with m > 4 or dd = 1: only the scalar branch of b^4
            # survives, the a^4 branch hits a zero mixed product
            reduce_b(m - 4, dd, coeff * b4_unit, out)
            return
        key = ("A", 0, 0) if m + dd == 0 else ("B", m, dd)
        v = out.get(key)
        v = coeff if v is None else v + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    def mul_terms(k1, k2) -> dict:
        s1, m1, d1 = k1
        s2, m2, d2 = k2
        out: dict = {}
        if m1 + d1 == 0 and s1 == "A":
            out[k2] = one
            return out
        if m2 + d2 == 0 and s2 == "A":
            out[k1] = one
            return out
        if s1 != s2:
            return out
        if s1 == "A":
            m, dd = m1 + m2, d1 + d2
            coeff = one
            if dd == 2:
                m, dd = m + 2, 0
            reduce_a(m, dd, coeff, out)
            return out
        m, dd = m1 + m2, d1 + d2
        coeff = one
        if dd == 2:
            m, dd = m + 2, 0
            coeff = coeff * cb
        reduce_b(m, dd, coeff, out)
        return out

    mul_cache: dict[tuple[int, int], Vector] = {}

    def mul_pair(i: int, j: int) -> Vector:
        got = mul_cache.get((i, j))
        if got is None:
            out = mul_terms(_SUZ_BASIS[i], _SUZ_BASIS[j])
            got = Vector(dim, {index[k]: c for k, c in out.items()}, fs)
            mul_cache[(i, j)] = got
        return got

    def dict_mul(t1: dict, t2: dict) -> dict:
        out: dict = {}
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                for k3, c3 in mul_terms(k1, k2).items():
                    v = out.get(k3)
                    add = c1 * c2 * c3
                    v = add if v is None else v + add
                    if v:
                        out[k3] = v
                    else:
                        del out[k3]
        return out

    def morphism_row(images: dict) -> list[Vector]:
        """Extend generator images multiplicatively to all monomials."""
        row = []
        for s_, m_, d_ in _SUZ_BASIS:
            if s_ == "A":
                head, tail = images[("A", 1, 0)], images[("A", 0, 1)]
            else:
                head, tail = images[("B", 1, 0)], images[("B", 0, 1)]
            acc = {("A", 0, 0): one}
            for _ in range(m_):
                acc = dict_mul(acc, head)
            for _ in range(d_):
                acc = dict_mul(acc, tail)
            row.append(Vector(dim, {index[k]: c for k, c in acc.items()}, fs))
        return row

    img_a = {
        ("A", 1, 0): {("A", 0, 1): one},
        ("A", 0, 1): {("A", 1, 0): one},
        ("B", 1, 0): {("B", 0, 1): al_i * be},
        ("B", 0, 1): {("B", 1, 0): al * be_i},
    }
    img_d = {
        ("A", 1, 0): {("A", 0, 1): one},
        ("A", 0, 1): {("A", 1, 0): one},
        ("B", 1, 0): {("B", 0, 1): al * be_i},
        ("B", 0, 1): {("B", 1, 0): al_i * be},
    }
    row_a = morphism_row(img_a)
    row_d = morphism_row(img_d)
    zero_row = [Vector(dim, {}, fs) for _ in range(dim)]
    ident_row = [unit_vector(dim, j, fs) for j in range(dim)]

    alpha_gen = {UNIT: ident_row, A_: row_a, D_: row_d, B_: zero_row, C_: zero_row}
    beta_gen = dict(alpha_gen)

    gen_delta = {
        UNIT: [(UNIT, UNIT, one)],
        A_: [(A_, A_, one), (B_, C_, one)],
        B_: [(A_, B_, one), (B_, D_, one)],
        C_: [(C_, A_, one), (D_, C_, one)],
        D_: [(C_, B_, one), (D_, D_, one)],
    }
    peel = {}
    for m, (s_, m_, d_) in enumerate(_SUZ_BASIS):
        if m in alpha_gen:
            continue
        if s_ == "A":
            peel[m] = (A_, index[("A", m_ - 1, d_)])
        else:
            peel[m] = (B_, index[("B", m_ - 1, d_)])
    comul = _delta_by_induction(dim, gen_delta, peel, alpha_gen, beta_gen, mul_pair, fs)
    counit = Vector(dim, {index[("A", m_, d_)]: one for s_, m_, d_ in _SUZ_BASIS if s_ == "A"}, fs)

    mul = [[mul_pair(i, j) for j in range(dim)] for i in range(dim)]
    alg = AlgebraData(dim, list(_SUZ_LABELS), mul, unit_vector(dim, UNIT, fs), fs)
    coalg = CoalgebraData(dim, comul, counit, fs)
    s_map = solve_antipode(alg, coalg)
    if s_map is None:
        raise StructureError("the braided antipode system is inconsistent")

    rows: list[list[Vector] | None] = [None] * dim

    def act_row(m: int) -> list[Vector]:
        got = rows[m]
        if got is not None:
            return got
        s_, m_, d_ = _SUZ_BASIS[m]
        if m in alpha_gen:
            res = alpha_gen[m]
        elif s_ == "B":
            res = zero_row
        else:
            # peel one a off: (a.w) >- z = a >- ((alpha_a w) >- z)
            w_idx = index[("A", m_ - 1, d_)]
            img = row_a[w_idx]           # alpha_a(w), a single monomial
            res = []
            for j in range(dim):
                acc: dict[int, Scalar] = {}
                for t, ct in img.entries.items():
                    inner = act_row(t)[j]
                    for u, cu in inner.entries.items():
                        add_scaled_inplace(acc, row_a[u], ct * cu)
                res.append(Vector(dim, acc, fs))
        rows[m] = res
        return res

    action = ActionTensor(dim, dim, [act_row(m) for m in range(dim)], fs)
    carrier = BraidedPair(alg, coalg, s_map)
    s = YDPostHopf(carrier, action, None, params={"alpha": al, "beta": be})
    bullet = bullet_algebra(s)
    sharp = solve_antipode(bullet, coalg)
    if sharp is None:
        raise StructureError("the subadjacent antipode system is inconsistent")
    beta_rows = [
        [action.apply(sharp.column(m), unit_vector(dim, j, fs)) for j in range(dim)]
        for m in range(dim)
    ]
    s.beta = ActionTensor(dim, dim, beta_rows, fs)
    return _certify(s, "suzuki")


# --- adjoint-action construction --------------------------------------------


def build_adjoint(h: HopfData) -> YDPostHopf:
    """From an ordinary Hopf algebra: action a >- b = a_1 o b o T(a_2),
    braided product a.b = a_1 o T(a_3) o b o T(T(a_2)), braided antipode
    S(a) = a_1 o T(a_3) o T(a_2), beta_a = (T(a) >- -)."""
    d = h.dim
    fs = h.field
    halg, hco, t_map = h.algebra, h.coalgebra, h.antipode
    act_rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc: dict[int, Scalar] = {}
            for i1, i2, c in hco.comul[i]:
                u = halg.mul_vec(halg.mul[i1][j], t_map.column(i2))
                add_scaled_inplace(acc, u, c)
            row.append(Vector(d, acc, fs))
        act_rows.append(row)
    action = ActionTensor(d, d, act_rows, fs)
    mul = []
    for i in range(d):
        legs = hco.legs(i, 3)
        row = []
        for j in range(d):
            acc: dict[int, Scalar] = {}
            for (i1, i2, i3), c in legs:
                u = halg.mul_basis_vec(i1, t_map.column(i3))
                u = halg.mul_vec_basis(u, j)
                u = halg.mul_vec(u, t_map.apply(t_map.column(i2)))
                add_scaled_inplace(acc, u, c)
            row.append(Vector(d, acc, fs))
        mul.append(row)
    alg = AlgebraData(d, list(halg.basis_labels), mul, halg.unit, fs)
    cols = []
    for i in range(d):
        acc: dict[int, Scalar] = {}
        for (i1, i2, i3), c in hco.legs(i, 3):
            u = halg.mul_basis_vec(i1, t_map.column(i3))
            u = halg.mul_vec(u, t_map.column(i2))
            add_scaled_inplace(acc, u, c)
        cols.append(Vector(d, acc, fs))
    s_map = matrix_from_columns(cols, fs)
    beta_rows = []
    for i in range(d):
        tv = t_map.column(i)
        beta_rows.append([action.apply(tv, unit_vector(d, j, fs)) for j in range(d)])
    carrier = BraidedPair(alg, hco, s_map)
    s = YDPostHopf(carrier, action, ActionTensor(d, d, beta_rows, fs))
    return _certify(s, "adjoint")


# --- group machinery and linearization ---------------------------------------


def cyclic_group(n: int) -> GroupTable:
    return GroupTable([f"c{i}" for i in range(n)],
                      [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group_3() -> GroupTable:
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["e", "(01)", "(02)", "(12)", "(012)", "(021)"]
    idx = {p: i for i, p in enumerate(perms)}
    mul = [
        [idx[tuple(p[q[x]] for x in range(3))] for q in perms]
        for p in perms
    ]
    return GroupTable(labels, mul)


def trivial_phi(g: GroupTable, h: GroupTable) -> list[list[int]]:
    return [list(range(h.order)) for _ in range(g.order)]


def conjugation_phi(g: GroupTable) -> list[list[int]]:
    return [
        [g.mul[g.mul[i][j]][g.inverse(i)] for j in range(g.order)]
        for i in range(g.order)
    ]


def group_rb_identity(g: GroupTable) -> GroupRB:
    """R = id with the trivial action: the homomorphism case."""
    return GroupRB(g, g, trivial_phi(g, g), list(range(g.order)))


def group_rb_inversion(g: GroupTable) -> GroupRB:
    """R(h) = h^{-1} with phi = conjugation, a weight-1 operator on any group."""
    return GroupRB(g, g, conjugation_phi(g), [g.inverse(i) for i in range(g.order)])


def group_algebra(table: GroupTable, field: FieldSpec = RATIONALS) -> HopfData:
    n = table.order
    fs = field
    one = fs.one
    e = table.identity()
    if e is None:
        raise StructureError("table has no identity element")
    mul = [[unit_vector(n, table.mul[i][j], fs) for j in range(n)] for i in range(n)]
    alg = AlgebraData(n, list(table.elements), mul, unit_vector(n, e, fs), fs)
    coalg = CoalgebraData(n, [[(i, i, one)] for i in range(n)],
                          Vector(n, {i: one for i in range(n)}, fs), fs)
    s_map = Matrix(n, n, {(table.inverse(i), i): one for i in range(n)}, fs)
    return HopfData(alg, coalg, s_map)


def build_group_rb_linearization(grb: GroupRB, field: FieldSpec = RATIONALS) -> YDPostHopf:
    """Linearize a weight-1 operator of a group on itself: the group algebra
    with the basis-permutation action h >- k = phi(R(h))(k)."""
    if grb.group_g.mul != grb.group_h.mul:
        raise StructureError("the linearization needs a single group acting on itself")
    rep = check_group_rb(grb)
    if not rep.all_pass():
        bad = ", ".join(e.axiom for e in rep.failed())
        raise StructureError(f"the group operator fails its axioms: {bad}")
    table = grb.group_h
    n = table.order
    fs = field
    hopf = group_algebra(table, fs)
    act_rows = []
    beta_rows = []
    for i in range(n):
        perm = grb.phi[grb.r[i]]
        act_rows.append([unit_vector(n, perm[j], fs) for j in range(n)])
        inv_perm = [0] * n
        for j, pj in enumerate(perm):
            inv_perm[pj] = j
        beta_rows.append([unit_vector(n, inv_perm[j], fs) for j in range(n)])
    carrier = BraidedPair(hopf.algebra, hopf.coalgebra, hopf.antipode)
    s = YDPostHopf(
        carrier,
        ActionTensor(n, n, act_rows, fs),
        ActionTensor(n, n, beta_rows, fs),
    )
    return _certify(s, "group-linearization")


def build_trivial(field: FieldSpec = RATIONALS) -> YDPostHopf:
    """The unit object: everything concentrated on a single basis vector."""
    fs = field
    one = fs.one
    unit = Vector(1, {0: one}, fs)
    alg = AlgebraData(1, ["1"], [[unit]], unit, fs)
    coalg = CoalgebraData(1, [[(0, 0, one)]], unit, fs)
    carrier = BraidedPair(alg, coalg, Matrix(1, 1, {(0, 0): one}, fs))
    s = YDPostHopf(carrier, ActionTensor(1, 1, [[unit]], fs),
                   ActionTensor(1, 1, [[unit]], fs))
    return _certify(s, "trivial")


def sweedler_hopf(field: FieldSpec = RATIONALS) -> HopfData:
    """The ordinary four-dimensional Hopf algebra (the subadjacent one)."""
    from .posthopf import subadjacent_hopf

    return subadjacent_hopf(build_sweedler(1, field), verify=True)
