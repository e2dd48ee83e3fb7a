"""Exact dense linear algebra over the scalar field.

Elimination is fraction-free (division-postponed): every update step is

    a'[i][j] = (pivot * a[i][j] - a[i][c] * row_c[j]) / previous_pivot

with an exact division, which keeps integer systems integral and controls
coefficient growth on polynomial systems.  Pivot selection prefers
parameter-free entries; every pivot that does involve parameters is recorded
(normalized) in an :class:`ExceptionalSet`.  Generic answers (rank, nullspace
bases, solutions) are then valid at every parameter specialization that
avoids the roots of the recorded polynomials.

Parameter-free matrices take a pure integer fast path: rows are scaled to
integers and eliminated with native arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero
from .scalars import Poly, Scalar, poly_normalize

_ZERO = Scalar.of(0)
_ONE = Scalar.of(1)


class ExceptionalSet:
    """Normalized polynomials whose roots the generic answer may miss."""

    __slots__ = ("polys",)

    def __init__(self, polys=()):
        # dedupe, drop constants, deterministic order
        seen = []
        for p in polys:
            if p.is_zero() or p.is_constant():
                continue
            if p not in seen:
                seen.append(p)
        seen.sort(key=lambda q: (q.total_degree(), str(q)))
        self.polys = tuple(seen)

    @staticmethod
    def empty() -> "ExceptionalSet":
        return ExceptionalSet()

    def is_empty(self) -> bool:
        return not self.polys

    def union(self, other: "ExceptionalSet") -> "ExceptionalSet":
        if not other.polys:
            return self
        if not self.polys:
            return other
        return ExceptionalSet(self.polys + other.polys)

    def vanishes_at(self, values: dict) -> bool:
        """True when the assignment is exceptional (some member vanishes)."""
        for p in self.polys:
            v = p.substitute(values)
            if v.is_zero():
                return True
        return False

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __repr__(self):
        return f"ExceptionalSet({[str(p) for p in self.polys]})"


class Matrix:
    """Immutable dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(Scalar.of(e) for e in row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @staticmethod
    def from_rows(rows) -> "Matrix":
        return Matrix(rows)

    def row(self, i):
        return self.entries[i]

    def is_parametric(self) -> bool:
        return any(not e.is_rational for row in self.entries for e in row)

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self.entries:
            total = _ZERO
            for a, v in zip(row, vec):
                if not a.is_zero():
                    total = total + a * Scalar.of(v)
            out.append(total)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries))) if self.entries else Matrix(())

    def __repr__(self):
        body = "; ".join(
            " ".join(str(e) for e in row) for row in self.entries
        )
        return f"Matrix[{self.rows}x{self.cols}]({body})"


# -- elimination core -----------------------------------------------------


class _Echelon:
    """Result of fraction-free elimination on (possibly augmented) rows."""

    __slots__ = ("rows", "pivots", "exceptional", "ncols", "npivot")

    def __init__(self, rows, pivots, exceptional, ncols, npivot):
        self.rows = rows                # list[list[Scalar]]
        self.pivots = pivots            # list[(row, col)], col < npivot
        self.exceptional = exceptional  # list[Poly], normalized
        self.ncols = ncols
        self.npivot = npivot


def _int_bareiss(rows, npivot):
    """In-place Bareiss over integer rows; returns pivot positions."""
    m = len(rows)
    if not m:
        return []
    n = len(rows[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(npivot):
        p = -1
        for i in range(r, m):
            if rows[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        rowr = rows[r]
        piv = rowr[c]
        for i in range(r + 1, m):
            rowi = rows[i]
            f = rowi[c]
            if f:
                for j in range(c + 1, n):
                    rowi[j] = (piv * rowi[j] - f * rowr[j]) // prev
                rowi[c] = 0
            elif prev != piv:
                for j in range(c + 1, n):
                    rowi[j] = (piv * rowi[j]) // prev
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    return pivots


def _poly_bareiss(rows, npivot):
    """In-place Bareiss over Poly rows; returns (pivots, exceptional)."""
    m = len(rows)
    exceptional = []
    if not m:
        return [], exceptional
    n = len(rows[0])
    pivots = []
    prev = Poly.const(1)
    r = 0
    for c in range(npivot):
        p = -1
        for i in range(r, m):  # prefer a parameter-free pivot
            e = rows[i][c]
            if not e.is_zero() and e.is_constant():
                p = i
                break
        if p < 0:
            for i in range(r, m):
                if not rows[i][c].is_zero():
                    p = i
                    break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        rowr = rows[r]
        piv = rowr[c]
        trivial = prev.is_constant() and prev.constant_value() == 1
        for i in range(r + 1, m):
            rowi = rows[i]
            f = rowi[c]
            if not f.is_zero():
                for j in range(c + 1, n):
                    upd = piv * rowi[j] - f * rowr[j]
                    rowi[j] = upd if trivial else upd.exact_div(prev)
                rowi[c] = Poly.const(0)
            elif not (trivial and piv.is_constant() and piv.constant_value() == 1):
                for j in range(c + 1, n):
                    upd = piv * rowi[j]
                    rowi[j] = upd if trivial else upd.exact_div(prev)
        prev = piv
        pivots.append((r, c))
        if not piv.is_constant():
            exceptional.append(poly_normalize(piv))
        r += 1
        if r == m:
            break
    return pivots, exceptional


def _eliminate(rows, npivot) -> _Echelon:
    """Eliminate Scalar rows; only the first ``npivot`` columns may carry
    pivots (remaining columns ride along as augmented data)."""
    rows = [list(row) for row in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    exceptional = []

    if all(e.is_rational for row in rows for e in row):
        work = []
        for row in rows:
            den = 1
            for e in row:
                q = e.as_fraction().denominator
                den = den * q // _gcd(den, q)
            work.append([int(e.as_fraction() * den) for e in row])
        pivots = _int_bareiss(work, npivot)
        out = [[Scalar.of(v) for v in row] for row in work]
        return _Echelon(out, pivots, [], n, npivot)

    # clear denominators row by row; each cleared denominator is a
    # degeneration locus of the input itself, so record it
    work = []
    for row in rows:
        dens = []
        for e in row:
            if e.is_fraction:
                d = e.denominator_poly()
                if d not in dens:
                    dens.append(d)
        new_row = []
        for e in row:
            p = e.numerator_poly()
            for d in dens:
                if not (e.is_fraction and e.denominator_poly() == d):
                    p = p * d
            new_row.append(p)
        work.append(new_row)
        for d in dens:
            exceptional.append(poly_normalize(d))

    pivots, piv_exc = _poly_bareiss(work, npivot)
    exceptional.extend(piv_exc)
    out = [[Scalar.of(p) for p in row] for row in work]
    return _Echelon(out, pivots, exceptional, n, npivot)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _back_substitute(ech: _Echelon, col_take, rhs_col=None):
    """Solve the echelon system for one assignment of the free columns.

    ``col_take`` maps free column -> Scalar value; ``rhs_col`` is the index
    of an augmented column used as right-hand side (None for homogeneous).
    Returns a dense tuple over the first ``npivot`` columns."""
    x = dict(col_take)
    for r, pc in reversed(ech.pivots):
        row = ech.rows[r]
        total = row[rhs_col] if rhs_col is not None else _ZERO
        for j, v in x.items():
            if j > pc:
                a = row[j]
                if not a.is_zero() and not v.is_zero():
                    total = total - a * v
        x[pc] = total / row[pc]
    return tuple(x.get(j, _ZERO) for j in range(ech.npivot))


class NullspaceResult:
    __slots__ = ("basis", "exceptional")

    def __init__(self, basis, exceptional):
        self.basis = basis
        self.exceptional = exceptional

    @property
    def dim(self):
        return len(self.basis)


def nullspace(m: Matrix) -> NullspaceResult:
    """Basis of the right nullspace, generic in any parameters."""
    if m.rows == 0 or m.cols == 0:
        basis = tuple(
            tuple(_ONE if i == j else _ZERO for j in range(m.cols))
            for i in range(m.cols)
        )
        return NullspaceResult(basis, ExceptionalSet())
    ech = _eliminate(m.entries, m.cols)
    pivot_cols = {c for _, c in ech.pivots}
    free = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for f in free:
        take = {c: (_ONE if c == f else _ZERO) for c in free}
        # homogeneous back-substitution needs the sum over free columns too
        vec = _back_substitute_homogeneous(ech, take)
        basis.append(vec)
    return NullspaceResult(tuple(basis), ExceptionalSet(ech.exceptional))


def _back_substitute_homogeneous(ech: _Echelon, take):
    x = dict(take)
    for r, pc in reversed(ech.pivots):
        row = ech.rows[r]
        total = _ZERO
        for j, v in x.items():
            if j > pc and not v.is_zero():
                a = row[j]
                if not a.is_zero():
                    total = total - a * v
        x[pc] = total / row[pc]
    return tuple(x.get(j, _ZERO) for j in range(ech.npivot))


class RankResult:
    __slots__ = ("value", "exceptional")

    def __init__(self, value, exceptional):
        self.value = value
        self.exceptional = exceptional


def rank(m: Matrix) -> RankResult:
    """Generic rank with the parameter degenerations that could lower it."""
    if m.rows == 0 or m.cols == 0:
        return RankResult(0, ExceptionalSet())
    ech = _eliminate(m.entries, m.cols)
    return RankResult(len(ech.pivots), ExceptionalSet(ech.exceptional))


class SolveResult:
    """Solution set of ``m x = rhs``: none, unique, or an affine family."""

    __slots__ = ("status", "particular", "basis", "exceptional")

    def __init__(self, status, particular, basis, exceptional):
        self.status = status  # "none" | "unique" | "affine"
        self.particular = particular
        self.basis = basis
        self.exceptional = exceptional


def solve_affine(m: Matrix, rhs) -> SolveResult:
    """Solve a linear system exactly, reporting the full solution set."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    rows = [list(row) + [Scalar.of(b)] for row, b in zip(m.entries, rhs)]
    if not rows:
        basis = tuple(
            tuple(_ONE if i == j else _ZERO for j in range(m.cols))
            for i in range(m.cols)
        )
        status = "unique" if m.cols == 0 else "affine"
        return SolveResult(status, tuple(_ZERO for _ in range(m.cols)),
                           basis if m.cols else (), ExceptionalSet())
    ech = _eliminate(rows, m.cols)
    exceptional = list(ech.exceptional)
    ok = True
    for r in range(len(ech.pivots), len(ech.rows)):
        resid = ech.rows[r][m.cols]
        if resid.is_zero():
            continue
        ok = False
        p = resid.numerator_poly()
        if not p.is_constant():
            exceptional.append(poly_normalize(p))
    if not ok:
        return SolveResult("none", None, (), ExceptionalSet(exceptional))
    pivot_cols = {c for _, c in ech.pivots}
    free = [c for c in range(m.cols) if c not in pivot_cols]
    take = {c: _ZERO for c in free}
    particular = _back_substitute(ech, take, rhs_col=m.cols)
    basis = []
    for f in free:
        hom = {c: (_ONE if c == f else _ZERO) for c in free}
        basis.append(_back_substitute_homogeneous(ech, hom))
    status = "unique" if not free else "affine"
    return SolveResult(status, particular, tuple(basis), ExceptionalSet(exceptional))


def solve_columns(m: Matrix, rhs_columns):
    """Solve ``m x = b`` for many right-hand sides with one elimination.

    Returns (solutions, exceptional) where each solution is a coordinate
    tuple or None when that column is inconsistent.  Free coordinates are
    set to zero."""
    ncols = m.cols
    k = len(rhs_columns)
    rows = []
    for i, row in enumerate(m.entries):
        rows.append(list(row) + [Scalar.of(col[i]) for col in rhs_columns])
    ech = _eliminate(rows, ncols)
    exceptional = list(ech.exceptional)
    pivot_cols = {c for _, c in ech.pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    take = {c: _ZERO for c in free}
    out = []
    for t in range(k):
        col = ncols + t
        consistent = True
        for r in range(len(ech.pivots), len(ech.rows)):
            resid = ech.rows[r][col]
            if not resid.is_zero():
                consistent = False
                p = resid.numerator_poly()
                if not p.is_constant():
                    exceptional.append(poly_normalize(p))
                break
        out.append(_back_substitute(ech, take, rhs_col=col) if consistent else None)
    return out, ExceptionalSet(exceptional)
