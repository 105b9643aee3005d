from __future__ import annotations

import pytest

from config.formula_registry import SUPPORTED_FORMULAS
from src.analysis.verify import CHECKS, default_range, verify
from src.contracts.errors import UnknownFormulaError


def test_every_registered_formula_has_a_check():
    assert set(CHECKS) == set(SUPPORTED_FORMULAS)
    for name in SUPPORTED_FORMULAS:
        start, stop = default_range(name)
        assert start <= stop


@pytest.mark.parametrize(
    ("formula", "start", "stop", "rows"),
    [
        ("macmahon", 1, 2, 8),
        ("aztec-power", 1, 4, 4),
        ("moments-vertical", 1, 3, 3),
        ("invsum", 1, 5, 5),
        ("pillow-gf", 1, 1, 2),
        ("intruded-structure", 2, 3, 1),
        ("triangle-2adic", 3, 6, 6),
        ("cube", 1, 4, 4),
        ("carlitz-cokernel", 1, 2, 48),
        ("kenyon-factor", 1, 3, 3),
        ("intruded-full", 1, 3, 3),
        ("holey-ratio", 1, 1, 1),
    ],
)
def test_formula_holds_on_small_instances(formula, start, stop, rows):
    records = verify(formula, start, stop)
    assert len(records) == rows
    assert all(record.passed for record in records), [r for r in records if not r.passed]


def test_macmahon_with_explicit_sides():
    (record,) = verify("macmahon", 1, 1, {"a": 1, "b": 2, "c": 3})
    assert record.parameter == "1,2,3"
    assert record.expected == record.actual == "10"


def test_window_decomposition_default_widths_at_zero():
    records = verify("window-decomposition", 0, 0)
    assert [record.parameter for record in records] == ["x=0 w=2", "x=0 w=4", "x=0 w=6"]
    assert [record.actual for record in records] == ["8", "1024", "2097152"]
    assert all(record.passed for record in records)


def test_window_decomposition_single_width():
    records = verify("window-decomposition", 0, 1, {"w": 2})
    assert [record.parameter for record in records] == ["x=0 w=2", "x=1 w=2"]


def test_failing_instances_become_failed_records():
    records = verify("cube", 6, 6)
    assert len(records) == 1
    assert not records[0].passed
    assert records[0].actual.startswith("error:")


def test_unknown_formula():
    with pytest.raises(UnknownFormulaError):
        verify("riemann", 1, 2)
    with pytest.raises(UnknownFormulaError):
        default_range("riemann")


@pytest.mark.slow
@pytest.mark.parametrize(
    ("formula", "start", "stop", "rows"),
    [
        ("macmahon", 1, 4, 64),
        ("aztec-power", 7, 8, 2),
        ("invsum", 1, 8, 8),
        ("pillow-gf", 1, 4, 8),
        ("carlitz-cokernel", 3, 4, 6 * (19 + 37)),
    ],
)
def test_full_acceptance_ranges(formula, start, stop, rows):
    records = verify(formula, start, stop)
    assert len(records) == rows
    assert all(record.passed for record in records), [r for r in records if not r.passed]


@pytest.mark.slow
def test_intruded_square_of_order_six():
    (record,) = verify("intruded-structure", 6, 6)
    assert record.passed
    assert record.actual == "2^3 * 3^2 * 5^4 * 7^2 * 3187^2"
