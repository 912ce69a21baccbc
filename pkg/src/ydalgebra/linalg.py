"""Exact sparse/dense linear algebra over Q and F_p.

Solving, kernels and inverses are fraction-free over Q (Bareiss elimination
on dense systems below 64 columns, cross-multiplication with row-content
reduction on sparse ones) and plain modular elimination over F_p.  Every
result is re-verified against its defining equation before it is returned,
so a bug in the solver can never silently corrupt a structure check.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from .field import FieldSpec, ModInt, Scalar


class LinAlgError(ValueError):
    pass


_DENSE_LIMIT = 64


@dataclass
class Vector:
    """Sparse column vector; zero entries are never stored."""

    dim: int
    entries: dict[int, Scalar]
    field: FieldSpec

    def __post_init__(self):
        self.entries = {i: c for i, c in self.entries.items() if c}
        for i in self.entries:
            if not 0 <= i < self.dim:
                raise LinAlgError(f"index {i} out of range for dim {self.dim}")

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, i: int) -> Scalar:
        return self.entries.get(i, self.field.zero)

    def add(self, other: "Vector") -> "Vector":
        out = dict(self.entries)
        for i, c in other.entries.items():
            s = out.get(i)
            s = c if s is None else s + c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        return Vector(self.dim, out, self.field)

    def scale(self, c: Scalar) -> "Vector":
        if not c:
            return Vector(self.dim, {}, self.field)
        return Vector(self.dim, {i: v * c for i, v in self.entries.items()}, self.field)

    def neg(self) -> "Vector":
        return Vector(self.dim, {i: -v for i, v in self.entries.items()}, self.field)

    def sub(self, other: "Vector") -> "Vector":
        return self.add(other.neg())

    def items_sorted(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.dim == other.dim
            and self.entries == other.entries
        )


def zero_vector(dim: int, field: FieldSpec) -> Vector:
    return Vector(dim, {}, field)


def unit_vector(dim: int, i: int, field: FieldSpec) -> Vector:
    return Vector(dim, {i: field.one}, field)


def add_scaled_inplace(acc: dict[int, Scalar], v: Vector, c: Scalar) -> None:
    """acc += c * v on a raw entry dict; hot-loop helper."""
    if not c:
        return
    for i, w in v.entries.items():
        s = acc.get(i)
        s = w * c if s is None else s + w * c
        if s:
            acc[i] = s
        else:
            del acc[i]


@dataclass
class Matrix:
    """Sparse matrix, map (row, col) -> nonzero scalar."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], Scalar]
    field: FieldSpec

    def __post_init__(self):
        self.entries = {k: c for k, c in self.entries.items() if c}
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise LinAlgError(f"entry ({r},{c}) out of bounds")

    def get(self, r: int, c: int) -> Scalar:
        return self.entries.get((r, c), self.field.zero)

    def column(self, c: int) -> Vector:
        return Vector(
            self.rows,
            {r: v for (r, cc), v in self.entries.items() if cc == c},
            self.field,
        )

    def apply(self, v: Vector) -> Vector:
        out: dict[int, Scalar] = {}
        for j, coeff in v.entries.items():
            for (r, c), a in self._cols().get(j, ()):
                s = out.get(r)
                s = a * coeff if s is None else s + a * coeff
                if s:
                    out[r] = s
                else:
                    del out[r]
        return Vector(self.rows, out, self.field)

    def _cols(self):
        cache = getattr(self, "_col_cache", None)
        if cache is None:
            cache = {}
            for (r, c), a in self.entries.items():
                cache.setdefault(c, []).append(((r, c), a))
            for lst in cache.values():
                lst.sort()
            self._col_cache = cache
        return cache

    def compose(self, other: "Matrix") -> "Matrix":
        """self @ other."""
        if self.cols != other.rows:
            raise LinAlgError("shape mismatch in compose")
        out: dict[tuple[int, int], Scalar] = {}
        by_row: dict[int, list[tuple[int, Scalar]]] = {}
        for (r, c), a in self.entries.items():
            by_row.setdefault(c, []).append((r, a))
        for (r2, c2), b in other.entries.items():
            for r1, a in by_row.get(r2, ()):
                key = (r1, c2)
                s = out.get(key)
                s = a * b if s is None else s + a * b
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Matrix(self.rows, other.cols, out, self.field)

    def add(self, other: "Matrix") -> "Matrix":
        out = dict(self.entries)
        for k, c in other.entries.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Matrix(self.rows, self.cols, out, self.field)

    def scale(self, c: Scalar) -> "Matrix":
        if not c:
            return Matrix(self.rows, self.cols, {}, self.field)
        return Matrix(self.rows, self.cols, {k: v * c for k, v in self.entries.items()}, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )


def identity_matrix(dim: int, field: FieldSpec) -> Matrix:
    return Matrix(dim, dim, {(i, i): field.one for i in range(dim)}, field)


def matrix_from_columns(cols: list[Vector], field: FieldSpec) -> Matrix:
    rows = cols[0].dim if cols else 0
    entries = {}
    for j, v in enumerate(cols):
        for i, c in v.entries.items():
            entries[(i, j)] = c
    return Matrix(rows, len(cols), entries, field)


@dataclass
class SolveResult:
    """Particular solution (None when inconsistent) plus a kernel basis."""

    solution: Vector | None
    kernel: list[Vector] = dc_field(default_factory=list)


# --- elimination engines ------------------------------------------------
#
# Internally a system is a list of rows over plain ints: over Q each row is
# stored with denominators cleared (fraction-free); over F_p as residues.
# Forward elimination returns echelon rows plus the pivot (row, col) list.


def _row_content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g or 1


def _forward_sparse_q(rows: list[dict[int, int]], ncols: int):
    pivots: list[tuple[int, int]] = []
    active = [dict(r) for r in rows]
    done: list[dict[int, int]] = []
    for col in range(ncols):
        cand = [i for i, r in enumerate(active) if r.get(col)]
        if not cand:
            continue
        cand.sort(key=lambda i: (len(active[i]), i))
        piv = active.pop(cand[0])
        pl = piv[col]
        nxt = []
        for r in active:
            rl = r.get(col)
            if rl:
                new: dict[int, int] = {}
                for c, v in r.items():
                    w = v * pl - piv.get(c, 0) * rl
                    if w:
                        new[c] = w
                for c, v in piv.items():
                    if c not in r:
                        w = -v * rl
                        if w:
                            new[c] = w
                g = _row_content(new)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                if new:
                    nxt.append(new)
            else:
                nxt.append(r)
        active = nxt
        pivots.append((len(done), col))
        done.append(piv)
    done.extend(r for r in active if r)
    return done, pivots


def _forward_dense_q(rows: list[dict[int, int]], ncols: int):
    """Classic Bareiss elimination on dense list rows."""
    m = [[r.get(c, 0) for c in range(ncols)] for r in rows]
    nrows = len(m)
    pivots: list[tuple[int, int]] = []
    prev = 1
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, nrows):
            if m[i][col]:
                sel = i
                break
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        pl = m[rank][col]
        for i in range(rank + 1, nrows):
            rl = m[i][col]
            row = m[i]
            prow = m[rank]
            for c in range(col, ncols):
                row[c] = (row[c] * pl - prow[c] * rl) // prev
        pivots.append((rank, col))
        prev = pl
        rank += 1
    out = []
    for row in m:
        d = {c: v for c, v in enumerate(row) if v}
        if d:
            out.append(d)
    # keep pivot rows aligned with their position in `out`
    return out, pivots


def _forward_fp(rows: list[dict[int, int]], ncols: int, p: int):
    pivots: list[tuple[int, int]] = []
    active = [dict(r) for r in rows]
    done: list[dict[int, int]] = []
    for col in range(ncols):
        cand = [i for i, r in enumerate(active) if r.get(col, 0) % p]
        if not cand:
            continue
        cand.sort(key=lambda i: (len(active[i]), i))
        piv = active.pop(cand[0])
        inv = pow(piv[col], p - 2, p)
        piv = {c: v * inv % p for c, v in piv.items() if v % p}
        nxt = []
        for r in active:
            rl = r.get(col, 0) % p
            if rl:
                new = {}
                keys = set(r) | set(piv)
                for c in keys:
                    w = (r.get(c, 0) - piv.get(c, 0) * rl) % p
                    if w:
                        new[c] = w
                if new:
                    nxt.append(new)
            else:
                nxt.append(r)
        active = nxt
        pivots.append((len(done), col))
        done.append(piv)
    done.extend(r for r in active if r)
    return done, pivots


def _to_int_rows(rowvecs: list[dict[int, Scalar]], fs: FieldSpec) -> list[dict[int, int]]:
    out = []
    if fs.p is None:
        for r in rowvecs:
            lcm = 1
            for v in r.values():
                lcm = lcm * v.denominator // gcd(lcm, v.denominator)
            row = {c: int(v * lcm) for c, v in r.items() if v}
            out.append(row)
    else:
        for r in rowvecs:
            row = {c: v.value for c, v in r.items() if v.value}
            out.append(row)
    return out


def _scalar(fs: FieldSpec, num, den=1) -> Scalar:
    if fs.p is None:
        return Fraction(num, den)
    s = ModInt(num, fs.p)
    return s if den == 1 else s / ModInt(den, fs.p)


def _echelon(rowvecs: list[dict[int, Scalar]], ncols: int, fs: FieldSpec):
    rows = _to_int_rows(rowvecs, fs)
    if fs.p is not None:
        return _forward_fp(rows, ncols, fs.p)
    if ncols < _DENSE_LIMIT:
        return _forward_dense_q(rows, ncols)
    return _forward_sparse_q(rows, ncols)


def _back_substitute(
    ech: list[dict[int, int]],
    pivots: list[tuple[int, int]],
    ncols: int,
    fs: FieldSpec,
    rhs_col: int | None,
    free_values: dict[int, Scalar],
) -> Vector | None:
    """Solve the echelon system with given free-variable values.

    ``rhs_col`` marks the augmented column (None for homogeneous systems).
    Returns None when a zero row has a nonzero right-hand side.
    """
    pivot_cols = {c for _, c in pivots}
    pivot_rows = {r for r, _ in pivots}
    for i, row in enumerate(ech):
        if i not in pivot_rows and row:
            if rhs_col is not None and set(row) == {rhs_col}:
                return None
            if rhs_col is not None and any(c != rhs_col for c in row):
                # stray non-pivot row over solvable columns cannot occur:
                # forward elimination pivots on every column it can reach
                raise LinAlgError("unreachable echelon shape")
    x: dict[int, Scalar] = {}
    for c in range(ncols):
        if rhs_col is not None and c == rhs_col:
            continue
        if c not in pivot_cols:
            v = free_values.get(c, fs.zero)
            if v:
                x[c] = v
    for r, c in reversed(pivots):
        row = ech[r]
        acc = _scalar(fs, 0)
        if rhs_col is not None and rhs_col in row:
            acc = acc + _scalar(fs, row[rhs_col])
        for cc, v in row.items():
            if cc == c or (rhs_col is not None and cc == rhs_col):
                continue
            xv = x.get(cc)
            if xv is not None:
                acc = acc - _scalar(fs, v) * xv
        piv = _scalar(fs, row[c])
        val = acc / piv
        if val:
            x[c] = val
    ncols_eff = ncols if rhs_col is None else ncols - 1
    return Vector(ncols_eff, x, fs)


def _kernel_from_echelon(ech, pivots, ncols, fs) -> list[Vector]:
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = _back_substitute(ech, pivots, ncols, fs, None, {f: fs.one})
        basis.append(v)
    return basis


def _rows_of_matrix(a: Matrix) -> list[dict[int, Scalar]]:
    rows: list[dict[int, Scalar]] = [dict() for _ in range(a.rows)]
    for (r, c), v in a.entries.items():
        rows[r][c] = v
    return rows


def solve(a: Matrix, b: Vector) -> SolveResult:
    """One particular solution of A x = b plus a kernel basis.

    The solution is verified by back-substitution before returning;
    ``solution`` is None when the system is inconsistent.
    """
    if a.rows != b.dim:
        raise LinAlgError("dimension mismatch in solve")
    fs = a.field
    rows = _rows_of_matrix(a)
    rhs_col = a.cols
    for i, c in b.entries.items():
        rows[i][rhs_col] = c
    ech, pivots = _echelon(rows, a.cols + 1, fs)
    if any(col == rhs_col for _, col in pivots):
        return SolveResult(None, _kernel_from_echelon(*_strip_rhs(ech, pivots, rhs_col), a.cols, fs))
    x = _back_substitute(ech, pivots, a.cols + 1, fs, rhs_col, {})
    kern = _kernel_from_echelon(*_strip_rhs(ech, pivots, rhs_col), a.cols, fs)
    if x is None:
        return SolveResult(None, kern)
    if a.apply(x) != b:
        raise LinAlgError("solver self-check failed: A x != b")
    for v in kern:
        if not a.apply(v).is_zero():
            raise LinAlgError("solver self-check failed: kernel vector")
    return SolveResult(x, kern)


def _strip_rhs(ech, pivots, rhs_col):
    ech2 = [{c: v for c, v in row.items() if c != rhs_col} for row in ech]
    piv2 = [(r, c) for r, c in pivots if c != rhs_col]
    return ech2, piv2


def kernel(a: Matrix) -> list[Vector]:
    """Basis of the null space, in free-column order (reduced echelon form)."""
    ech, pivots = _echelon(_rows_of_matrix(a), a.cols, a.field)
    basis = _kernel_from_echelon(ech, pivots, a.cols, a.field)
    for v in basis:
        if not a.apply(v).is_zero():
            raise LinAlgError("kernel self-check failed")
    return basis


def invert(a: Matrix) -> Matrix | None:
    """Exact inverse, or None when singular; A A^-1 = A^-1 A = I verified."""
    if a.rows != a.cols:
        raise LinAlgError("invert requires a square matrix")
    n = a.rows
    fs = a.field
    rows = _rows_of_matrix(a)
    for i in range(n):
        rows[i][n + i] = fs.one
    ech, pivots = _echelon(rows, 2 * n, fs)
    lead = [(r, c) for r, c in pivots if c < n]
    if len(lead) < n:
        return None
    cols = []
    for j in range(n):
        x = _back_substitute(
            [{c - 0: v for c, v in row.items()} for row in ech],
            pivots,
            2 * n,
            fs,
            None,
            {n + j: fs.one},
        )
        # x solves A y + e_j-extension = 0 over the augmented columns; flip sign
        col = Vector(n, {i: -v for i, v in x.entries.items() if i < n}, fs)
        cols.append(col)
    inv_m = matrix_from_columns(cols, fs)
    ident = identity_matrix(n, fs)
    if a.compose(inv_m) != ident or inv_m.compose(a) != ident:
        return None
    return inv_m
