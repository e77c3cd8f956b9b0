"""The acceptance suite: one test per criterion, one printed verdict line each.

Each test delegates to nyldon.acceptance (the same runners behind the
`nyldon selftest` subcommand), prints the formatted PASS/FAIL line, and
asserts the criterion held. Run with `pytest -s` to see the lines for
passing criteria too; failures always show them.
"""

import pytest

from nyldon import acceptance


def _check(number: int) -> None:
    result = acceptance.run_criterion(number)
    print(acceptance.format_result(result))
    assert result.ok, acceptance.format_result(result)


def test_criterion_01_short_word_enumeration():
    _check(1)


def test_criterion_02_worked_examples():
    _check(2)


def test_criterion_03_oracle_equivalence():
    _check(3)


def test_criterion_04_unique_member_conjugate():
    _check(4)


@pytest.mark.slow
def test_criterion_05_comparison_bound():
    _check(5)


def test_criterion_06_elimination_trace_table():
    _check(6)


def test_criterion_07_stop_word_predictions():
    _check(7)


def test_criterion_08_kraft_equality():
    _check(8)


def test_criterion_09_circular_codes():
    _check(9)


def test_criterion_10_power_deficit_bound():
    _check(10)


def test_criterion_11_lyndon_suffix_criterion():
    _check(11)


def test_criterion_12_property_suites():
    _check(12)
