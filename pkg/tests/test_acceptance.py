"""Acceptance suite: one test per verification criterion.

Each test delegates to :mod:`liedouble.acceptance`, which freezes the
expected values, and asserts the criterion's overall flag.  The per-check
detail lines are printed so failures are self-explanatory.

Criterion 8 is expected to fail: one of its checks asserts a published
constant that the stated bracket table does not produce (the table yields
-1 times the basis vector where -2 times it is asserted).  The check is
kept as stated on purpose and marked as a strict expected failure; see
README.md, section "Verification suite".
"""

import pytest

from liedouble import acceptance


def _report(result):
    print(f"criterion {result.number}: {result.title}")
    for line in result.lines:
        print(f"  {line}")
    verdict = "pass" if result.ok else "FAIL"
    print(f"criterion {result.number}: {verdict}")


def test_criterion_01_table_of_verdicts():
    result = acceptance.criterion_1()
    _report(result)
    assert result.ok


def test_criterion_02_symbolic_inner_operator_is_classical():
    result = acceptance.criterion_2()
    _report(result)
    assert result.ok


def test_criterion_03_modified_equation_unique_scalar():
    result = acceptance.criterion_3()
    _report(result)
    assert result.ok


def test_criterion_04_doubles_from_inner_operators():
    result = acceptance.criterion_4()
    _report(result)
    assert result.ok


def test_criterion_05_parametric_family_conditional_verdicts():
    result = acceptance.criterion_5()
    _report(result)
    assert result.ok


def test_criterion_06_generalized_derivation_dimensions():
    result = acceptance.criterion_6()
    _report(result)
    assert result.ok


def test_criterion_07_eight_dimensional_nilpotent_example():
    result = acceptance.criterion_7()
    _report(result)
    assert result.ok


@pytest.mark.xfail(
    strict=True,
    reason=(
        "one check asserts a published constant (-2 times a basis vector) "
        "that the stated bracket table does not produce; the computed value "
        "is -1 times that basis vector.  The check is implemented exactly as "
        "stated and reported as a failure by design.  See README.md."
    ),
)
def test_criterion_08_fixed_diagonal_map_values():
    result = acceptance.criterion_8()
    _report(result)
    assert result.ok


def test_criterion_09_filiform_family_all_derivations():
    result = acceptance.criterion_9()
    _report(result)
    assert result.ok


def test_criterion_10_simple_algebras_and_nilpotent_search():
    result = acceptance.criterion_10()
    _report(result)
    assert result.ok


def test_criterion_11_randomized_property_audits():
    result = acceptance.criterion_11()
    _report(result)
    assert result.ok


def test_criterion_12_serialization_round_trip():
    result = acceptance.criterion_12()
    _report(result)
    assert result.ok
