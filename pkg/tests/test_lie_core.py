"""Structure constants, elements, linear maps, and classical invariants."""

from fractions import Fraction

import pytest

from liedouble import (
    LieAlgebra,
    LinearMap,
    Scalar,
    center,
    derived_series,
    direct_sum,
    from_matrices,
    get,
    is_abelian,
    is_center_by_metabelian,
    is_metabelian,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilpotency_class,
    parse_element,
    second_derived,
    solvability_class,
)
from liedouble.errors import JacobiViolation, ParseError


def _dims(chain):
    return [sub.dim for sub in chain]


def test_constructor_validates_jacobi():
    # [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = e2 violates the Jacobi identity
    with pytest.raises(JacobiViolation):
        LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: 1}, (1, 2): {1: 1}})


def test_bracket_is_antisymmetric_and_bilinear():
    g = get("sl2")
    x = parse_element(g, "e1 + 2*e2")
    y = parse_element(g, "e2 - e3")
    assert g.bracket(x, y) == -g.bracket(y, x)
    z = parse_element(g, "3*e1")
    lhs = g.bracket(x + z, y)
    rhs = g.bracket(x, y) + g.bracket(z, y)
    assert lhs == rhs


def test_parse_element_accepts_labels_and_coefficients():
    g = get("n3")
    x = parse_element(g, "e1 - 3/2*e3")
    assert x.coords == (Scalar.of(1), Scalar.of(0), Scalar.of(Fraction(-3, 2)))


def test_parse_element_symbolic_coefficients():
    g = get("sl2")
    z = parse_element(g, "z1*e1 + z2*e2 + z3*e3")
    assert z.coords[0] == Scalar.variable("z1")
    assert z.coords[2] == Scalar.variable("z3")


def test_parse_element_unknown_label_without_new_names():
    g = get("n3")
    with pytest.raises(ParseError):
        parse_element(g, "e1 + nope*e2", allow_new_names=False)


def test_heisenberg_invariants():
    g = get("n3")
    assert _dims(lower_central_series(g)) == [1, 0]
    assert _dims(derived_series(g)) == [1, 0]
    assert nilpotency_class(g) == 2
    assert solvability_class(g) == 2
    assert center(g).dim == 1
    assert is_nilpotent(g) and is_solvable(g) and not is_abelian(g)


def test_simple_algebra_has_no_descending_chain():
    g = get("sl2")
    assert _dims(lower_central_series(g)) == [3]
    assert _dims(derived_series(g)) == [3]
    assert nilpotency_class(g) is None
    assert solvability_class(g) is None
    assert center(g).dim == 0
    assert not is_nilpotent(g) and not is_solvable(g)


def test_filiform_has_maximal_nilpotency_class():
    for n in (4, 6, 9):
        g = get("filiform", {"n": n})
        assert g.dim == n
        assert nilpotency_class(g) == n - 1


def test_solvable_non_nilpotent_example():
    g = get("r2")
    assert is_solvable(g) and not is_nilpotent(g)
    assert solvability_class(g) == 2
    assert is_metabelian(g)


def test_metabelian_and_center_by_metabelian_flags():
    assert is_metabelian(get("r2+r2"))
    assert is_metabelian(get("n3"))
    assert not is_metabelian(get("sl2"))
    assert is_center_by_metabelian(get("n3"))
    assert not is_center_by_metabelian(get("ex413"))


def test_second_derived_matches_derived_series():
    g = get("ex413")
    chain = derived_series(g)
    assert second_derived(g).dim == chain[1].dim
    assert _dims(chain) == [6, 2, 0]


def test_direct_sum_dims_labels_and_cross_brackets():
    g = direct_sum(get("r2"), get("n3"))
    assert g.dim == 5
    assert g.labels == ("e1", "e2", "e3", "e4", "e5")
    # cross-component brackets vanish
    for i in range(2):
        for j in range(2, 5):
            assert g.bracket(g.basis_element(i), g.basis_element(j)).is_zero()
    # each summand keeps its own structure
    assert not g.bracket(g.basis_element(0), g.basis_element(1)).is_zero()
    assert not g.bracket(g.basis_element(2), g.basis_element(3)).is_zero()


def test_direct_sum_invariants_combine():
    g = direct_sum(get("sl2"), get("n3"))
    assert center(g).dim == 1
    assert not is_solvable(g)


def test_linear_map_algebra():
    d = LinearMap.diagonal([0, 1, 2])
    i = LinearMap.identity(3)
    assert d.compose(i).entries == d.entries
    n = LinearMap([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert n.is_nilpotent()
    assert not d.is_nilpotent()
    c = d.commutator(n)
    # N lowers basis index by one, so [diag(0,1,2), N] acts as -N
    assert c.apply_vec((Scalar.of(0), Scalar.of(1), Scalar.of(0)))[0] == Scalar.of(-1)


def test_ad_map_matches_bracket():
    g = get("sl2")
    x = parse_element(g, "e1 - e2")
    ad_x = g.ad(x)
    for j in range(g.dim):
        y = g.basis_element(j)
        assert g.element(ad_x.apply_vec(y.coords)) == g.bracket(x, y)


def test_from_matrices_reconstructs_commutator_algebra():
    # e = E12, f = E21, h = E11 - E22 in 2x2 matrices
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]
    real = from_matrices([e, h, f], labels=["e", "h", "f"])
    g = real.algebra
    assert g.dim == 3
    # matches the standard table: [e,h] = -2e, [e,f] = h, [h,f] = -2f
    assert g.bracket_lines() == ["[e,h] = -2*e", "[e,f] = h", "[h,f] = -2*f"]
    assert not is_solvable(g)


def test_parametric_specialize_replaces_scalars():
    g = get("r3lambda")
    assert g.params == ("lam",)
    assert g.is_parametric()
    h = g.specialize({"lam": Fraction(2)})
    assert h.params == ()
    assert not h.is_parametric()
    # the specialized table carries the numeric coefficient
    assert any("2*" in line for line in h.bracket_lines())


def test_bracket_lines_describe_nonzero_products_only():
    g = get("n3")
    assert g.bracket_lines() == ["[e1,e2] = e3"]
