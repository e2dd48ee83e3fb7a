"""Fraction-free exact linear algebra and exceptional-set bookkeeping."""

from fractions import Fraction

from liedouble import (
    ExceptionalSet,
    Matrix,
    Scalar,
    nullspace,
    rank,
    solve_columns,
)


def _col(*values):
    return tuple(Scalar.of(v) for v in values)


def test_rank_of_singular_integer_matrix():
    m = Matrix([[1, 2], [2, 4]])
    assert rank(m).value == 1
    assert rank(Matrix([[1, 2], [3, 4]])).value == 2
    assert rank(Matrix([[0, 0], [0, 0]])).value == 0


def test_nullspace_of_rank_one_matrix():
    result = nullspace(Matrix([[1, 2], [2, 4]]))
    assert result.dim == 1
    (vec,) = result.basis
    # kernel of [[1,2],[2,4]] is spanned by (-2, 1)
    assert vec == (Scalar.of(-2), Scalar.of(1))


def test_nullspace_of_invertible_matrix_is_trivial():
    result = nullspace(Matrix([[2, 1], [1, 1]]))
    assert result.dim == 0
    assert result.basis == ()


def test_solve_columns_exact_rational_solution():
    m = Matrix([[2, 1], [1, 3]])
    solutions, exceptional = solve_columns(m, [_col(1, 0), _col(0, 1)])
    # the two solution columns form the inverse of m (det = 5)
    a, b = solutions
    assert a == (Scalar.of(Fraction(3, 5)), Scalar.of(Fraction(-1, 5)))
    assert b == (Scalar.of(Fraction(-1, 5)), Scalar.of(Fraction(2, 5)))
    assert list(exceptional) == []


def test_elimination_is_exact_on_ill_conditioned_input():
    # Hilbert-like matrix: floating point would lose the exact kernel/rank here.
    n = 6
    m = Matrix(
        [[Scalar.of(Fraction(1, i + j + 1)) for j in range(n)] for i in range(n)]
    )
    assert rank(m).value == n
    assert nullspace(m).dim == 0


def test_parametric_rank_records_exceptional_polynomials():
    t = Scalar.variable("t")
    m = Matrix([[t, Scalar.of(1)], [Scalar.of(1), t]])
    result = rank(m)
    assert result.value == 2
    # generic rank 2 degrades exactly where t^2 - 1 vanishes
    polys = list(result.exceptional)
    assert polys, "expected a nonempty exceptional set"
    assert result.exceptional.vanishes_at({"t": Fraction(1)})
    assert result.exceptional.vanishes_at({"t": Fraction(-1)})
    assert not result.exceptional.vanishes_at({"t": Fraction(2)})


def test_exceptional_set_deduplicates_and_drops_constants():
    t = Scalar.variable("t")
    p = (t - 1).numerator_poly()
    q = (t - 1).numerator_poly()  # identical condition listed twice
    c = Scalar.of(5).numerator_poly()  # nonzero constant carries no condition
    es = ExceptionalSet([p, q, c])
    assert [str(x) for x in es] == ["t - 1"]


def test_exceptional_set_orders_by_degree_then_text():
    t = Scalar.variable("t")
    u = Scalar.variable("u")
    quadratic = (t * t - 1).numerator_poly()
    linear_t = (t - 2).numerator_poly()
    linear_u = (u + 3).numerator_poly()
    es = ExceptionalSet([quadratic, linear_u, linear_t])
    degrees_then_text = [str(x) for x in es]
    assert degrees_then_text == ["t - 2", "u + 3", "t^2 - 1"]


def test_exceptional_set_vanishes_at_any_member():
    t = Scalar.variable("t")
    u = Scalar.variable("u")
    es = ExceptionalSet([(t - 1).numerator_poly(), (u + 1).numerator_poly()])
    assert es.vanishes_at({"t": Fraction(1), "u": Fraction(7)})
    assert es.vanishes_at({"t": Fraction(9), "u": Fraction(-1)})
    assert not es.vanishes_at({"t": Fraction(9), "u": Fraction(7)})
