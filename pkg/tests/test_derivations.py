"""Derivation spaces, generalized derivations, and related invariants."""

from fractions import Fraction

from liedouble import (
    LinearMap,
    abelian_algebra,
    derivation_lie_structure,
    derivation_space,
    generalized_derivation_space,
    get,
    inner_derivations,
    is_characteristically_nilpotent,
    is_derivation,
    rational_roots,
)


def test_derivations_of_abelian_algebra_fill_all_maps():
    g = abelian_algebra(4)
    assert derivation_space(g).dim == 16
    assert inner_derivations(g).dim == 0


def test_heisenberg_derivation_dimension():
    g = get("n3")
    space = derivation_space(g)
    assert space.dim == 6
    assert inner_derivations(g).dim == 2
    for d in space.basis:
        ok, witness = is_derivation(g, d)
        assert ok and witness is None


def test_simple_algebra_derivations_are_inner():
    g = get("sl2")
    assert derivation_space(g).dim == 3
    assert inner_derivations(g).dim == 3


def test_inner_derivation_is_always_a_derivation():
    for name in ("r2", "n4", "ex44", "ex413"):
        g = get(name)
        z = g.basis_element(0)
        ok, _ = is_derivation(g, g.ad(z))
        assert ok


def test_non_derivation_yields_witness_pair():
    g = get("n3")
    # swapping e1 and e3 does not respect [e1,e2] = e3
    m = LinearMap([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    ok, witness = is_derivation(g, m)
    assert not ok
    assert witness is not None
    i, j = witness
    assert 0 <= i < j < g.dim


def test_parametric_family_dimension_and_jumps():
    g = get("glambda")
    space = derivation_space(g)
    assert space.dim == 12
    jump_points = set()
    for p in space.exceptional:
        jump_points |= set(rational_roots(p).roots)
    assert Fraction(-1) in jump_points
    assert derivation_space(g.specialize({"lam": Fraction(-1)})).dim == 13
    assert derivation_space(g.specialize({"lam": Fraction(0)})).dim == 12
    assert derivation_space(g.specialize({"lam": Fraction(2)})).dim == 12


def test_generalized_derivation_dimensions_depend_on_parameter():
    g1 = get("glambda", {"lam": Fraction(1)})
    g2 = get("glambda", {"lam": Fraction(2)})
    assert generalized_derivation_space(g1, 3).dim == 12
    assert generalized_derivation_space(g2, 3).dim == 11
    # ordinary derivations sit inside every generalized space at t = 1
    assert generalized_derivation_space(g1, 1).dim == derivation_space(g1).dim


def test_generalized_derivation_defining_equation():
    g = get("glambda", {"lam": Fraction(2)})
    t = Fraction(3)
    space = generalized_derivation_space(g, t)
    for d in space.basis:
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                x, y = g.basis_element(i), g.basis_element(j)
                lhs = g.bracket(x, y).scale(t).algebra.element(
                    d.apply_vec(g.bracket(x, y).scale(t).coords)
                )
                rhs = g.bracket(g.element(d.apply_vec(x.coords)), y) + g.bracket(
                    x, g.element(d.apply_vec(y.coords))
                )
                assert lhs == rhs


def test_derivation_lie_structure_closes_under_commutator():
    g = get("n3")
    space = derivation_space(g)
    der = derivation_lie_structure(space)
    assert der.dim == space.dim
    # spot-check: the structure constants reproduce an actual commutator
    d0, d1 = space.basis[0], space.basis[1]
    comm = d0.compose(d1).entries
    anti = d1.compose(d0).entries
    direct = [
        [a - b for a, b in zip(row_a, row_b)] for row_a, row_b in zip(comm, anti)
    ]
    coords = der.bracket(der.basis_element(0), der.basis_element(1)).coords
    rebuilt = None
    for k, c in enumerate(coords):
        term = [[c * e for e in row] for row in space.basis[k].entries]
        if rebuilt is None:
            rebuilt = term
        else:
            rebuilt = [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(rebuilt, term)
            ]
    assert rebuilt == direct


def test_characteristically_nilpotent_detection():
    assert is_characteristically_nilpotent(get("ex413"))
    assert not is_characteristically_nilpotent(get("n3"))
    assert not is_characteristically_nilpotent(get("filiform", {"n": 6}))


def test_derivation_space_of_parametric_family_has_exceptional_locus():
    space = derivation_space(get("r3lambda"))
    assert space.dim == 4
    assert [str(p) for p in space.exceptional] == ["lam - 1"]
    assert derivation_space(get("r3lambda", {"lam": Fraction(1)})).dim == 6
