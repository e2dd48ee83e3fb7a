"""Derivation spaces, computed exactly from the Leibniz constraints.

A linear map D is a derivation when D[x,y] = [Dx,y] + [x,Dy] on all basis
pairs.  More generally, for a rational weight t, the weighted variant asks
t*D[x,y] = [Dx,y] + [x,Dy]; weight 1 recovers the ordinary notion.  The
constraint system is linear in the n^2 matrix entries and is solved by exact
elimination, so parametric structure constants yield parametric derivation
matrices together with the exceptional parameter values of the elimination.
"""

from __future__ import annotations

from .errors import NotIndependent
from .lie_core import LieAlgebra, LinearMap, Subspace, from_matrices
from .linalg import ExceptionalSet, Matrix, nullspace, _eliminate
from .scalars import Scalar

_ZERO = Scalar.of(0)
_ONE = Scalar.of(1)


class DerivationSpace:
    """Basis of (weighted) derivations of a fixed algebra.

    kind is "ordinary", "generalized" (weight other than 1) or "inner"."""

    __slots__ = ("algebra", "basis", "exceptional", "weight", "kind")

    def __init__(self, algebra, basis, exceptional=None, weight=_ONE, kind="ordinary"):
        self.algebra = algebra
        self.basis = tuple(basis)
        self.exceptional = exceptional or ExceptionalSet()
        self.weight = Scalar.of(weight)
        self.kind = kind

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return f"DerivationSpace(dim={self.dim}, kind={self.kind}, weight={self.weight})"


def _leibniz_rows(g: LieAlgebra, weight: Scalar):
    """One row per (pair, coordinate); unknown d[a][b] lives at index a*n+b."""
    n = g.dim
    c = [[g._c(i, j) for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = c[i][j]
            for a in range(n):
                row = [_ZERO] * (n * n)
                for k, coef in cij.items():
                    row[a * n + k] = row[a * n + k] + coef * weight
                for b in range(n):
                    c1 = c[b][j].get(a)
                    if c1 is not None:
                        row[b * n + i] = row[b * n + i] - c1
                    c2 = c[i][b].get(a)
                    if c2 is not None:
                        row[b * n + j] = row[b * n + j] - c2
                if any(not e.is_zero() for e in row):
                    rows.append(row)
    return rows


def derivation_space(g: LieAlgebra, weight=1) -> DerivationSpace:
    """All weighted derivations; weight 1 gives the usual derivation algebra.

    Results are cached on the algebra object."""
    weight = Scalar.of(weight)
    key = ("derivations", str(weight))
    hit = g._cache.get(key)
    if hit is not None:
        return hit
    kind = "ordinary" if weight == _ONE else "generalized"
    n = g.dim
    rows = _leibniz_rows(g, weight)
    if not rows:
        basis = [
            LinearMap(
                [
                    [_ONE if (a, b) == (p, q) else _ZERO for b in range(n)]
                    for a in range(n)
                ]
            )
            for p in range(n)
            for q in range(n)
        ]
        out = DerivationSpace(g, basis, ExceptionalSet(), weight, kind)
    else:
        ns = nullspace(Matrix(rows))
        maps = [
            LinearMap([[vec[a * n + b] for b in range(n)] for a in range(n)])
            for vec in ns.basis
        ]
        out = DerivationSpace(g, maps, ns.exceptional, weight, kind)
    g._cache[key] = out
    return out


def generalized_derivation_space(g: LieAlgebra, t) -> DerivationSpace:
    """Maps with t*D[x,y] = [Dx,y] + [x,Dy] on all pairs; t = 1 is ordinary."""
    return derivation_space(g, weight=t)


def inner_derivations(g: LieAlgebra) -> DerivationSpace:
    """Span of the left bracket operators ad(e_i), echelonized."""
    key = ("inner",)
    hit = g._cache.get(key)
    if hit is not None:
        return hit
    n = g.dim
    ads = [g.ad(g.basis_element(i)) for i in range(n)]
    flat = [list(m.vec()) for m in ads if not m.is_zero()]
    if not flat:
        out = DerivationSpace(g, (), ExceptionalSet(), kind="inner")
    else:
        ech = _eliminate([row[:] for row in flat], n * n)
        maps = []
        for r, _ in ech.pivots:
            vec = ech.rows[r]
            maps.append(
                LinearMap([[vec[a * n + b] for b in range(n)] for a in range(n)])
            )
        out = DerivationSpace(g, maps, ExceptionalSet(ech.exceptional), kind="inner")
    g._cache[key] = out
    return out


def is_derivation(g: LieAlgebra, m: LinearMap, weight=1):
    """Exact symbolic check; returns (ok, witness_pair_or_None).

    The witness is the first basis pair (i, j), 0-based, where the Leibniz
    rule fails identically."""
    if m.dim != g.dim:
        raise ValueError("map dimension does not match the algebra")
    weight = Scalar.of(weight)
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = m.apply_sparse(g._c(i, j))
            rhs = g.bracket_sparse(m.columns[i], {j: _ONE})
            for k, v in g.bracket_sparse({i: _ONE}, m.columns[j]).items():
                rhs[k] = rhs.get(k, _ZERO) + v
            diff = {}
            for k in set(lhs) | set(rhs):
                d = lhs.get(k, _ZERO) * weight - rhs.get(k, _ZERO)
                if not d.is_zero():
                    diff[k] = d
            if diff:
                return False, (i, j)
    return True, None


def derivation_lie_structure(space: DerivationSpace, labels=None) -> LieAlgebra:
    """Lie algebra the derivation basis spans under the commutator."""
    if space.dim == 0:
        return LieAlgebra(0, {}, labels=())
    if labels is None:
        labels = tuple(f"D{t + 1}" for t in range(space.dim))
    mats = [Matrix(m.entries) for m in space.basis]
    return from_matrices(mats, labels=labels).algebra


def is_characteristically_nilpotent(g: LieAlgebra) -> bool:
    """True when the derivation algebra is nilpotent as a Lie algebra.

    Only meaningful for parameter-free algebras; parametric input is
    rejected rather than answered generically."""
    if g.params or g.is_parametric():
        raise ValueError("requires a parameter-free algebra")
    from .lie_core import is_nilpotent

    space = derivation_space(g)
    if space.dim == 0:
        return True
    return is_nilpotent(derivation_lie_structure(space))
