from __future__ import annotations

from fractions import Fraction

import pytest

from config.constants import (
    PILLOW_0MOD4_GF_NUMERATOR,
    PILLOW_2MOD4_GF_NUMERATOR,
    PILLOW_GF_DENOMINATOR,
    WINDOW_DECOMPOSITIONS,
)
from src.analysis.fitting import (
    _echelon_solution,
    evaluate,
    fit_polynomial,
    fit_recurrence,
    series_coefficients,
    window_decomposition_value,
    window_evenness,
)
from src.analysis.formulas import aztec_power
from src.graph.flow import run_count


def test_polynomial_fit_with_heldout_points():
    fit = fit_polynomial([(x, x * x) for x in range(6)])
    assert fit.kind == "POLYNOMIAL"
    assert fit.coefficients == (0, 0, 1)
    assert fit.order == 2
    assert fit.heldout == 3


def test_constant_sequence_fits_degree_zero():
    fit = fit_polynomial([(x, 8) for x in range(4)])
    assert fit.coefficients == (8,) and fit.order == 0


def test_polynomial_fit_fails_without_enough_points():
    fit = fit_polynomial([(x, 2**x) for x in range(5)])
    assert fit.kind == "NONE"


def test_polynomial_fit_rejects_repeated_abscissae():
    with pytest.raises(ValueError):
        fit_polynomial([(1, 1), (1, 2), (2, 3)])


def test_recurrence_fit_fibonacci():
    fit = fit_recurrence([1, 1, 2, 3, 5, 8, 13, 21, 34])
    assert fit.kind == "RECURRENCE"
    assert fit.coefficients == (1, 1)
    assert fit.heldout == 5


def test_recurrence_fit_recovers_pillow_denominator():
    terms = series_coefficients(PILLOW_0MOD4_GF_NUMERATOR, PILLOW_GF_DENOMINATOR, 12)
    fit = fit_recurrence(terms)
    assert fit.order == 4
    assert fit.coefficients == (2, 2, 2, -1)


def test_recurrence_fit_reports_none():
    assert fit_recurrence([1, 2, 4, 7, 100, 3, 9, 12], max_order=2).kind == "NONE"


def test_zero_sequence_is_the_empty_recurrence():
    fit = fit_recurrence([0] * 8)
    assert fit.kind == "RECURRENCE"
    assert fit.order == 0
    assert fit.coefficients == ()
    assert fit.heldout == 8


def test_leading_zeros_do_not_make_a_zero_sequence():
    assert fit_recurrence([0, 0, 0, 0, 0, 0, 0, 1]).kind == "NONE"


def test_geometric_sequence_fits_at_order_one():
    fit = fit_recurrence([3 * 2**k for k in range(10)])
    assert (fit.order, fit.coefficients) == (1, (2,))


@pytest.mark.parametrize(
    ("rows", "rhs", "expected"),
    [
        ([[1, 1], [2, 2]], [3, 6], [3, 0]),
        ([[0, 1], [0, 2], [0, 3]], [5, 10, 15], [0, 5]),
        ([[1, 1], [2, 2]], [3, 7], None),
        ([[2, 1], [1, 1], [0, 1]], [3, 2, 1], [1, 1]),
    ],
)
def test_echelon_solution_sets_free_coefficients_to_zero(rows, rhs, expected):
    rows = [[Fraction(value) for value in row] for row in rows]
    solution = _echelon_solution(rows, [Fraction(value) for value in rhs])
    assert solution == expected


@pytest.mark.parametrize(
    ("numerator", "expected"),
    [
        (PILLOW_0MOD4_GF_NUMERATOR, [5, 13, 37, 109]),
        (PILLOW_2MOD4_GF_NUMERATOR, [5, 16, 45]),
    ],
)
def test_pillow_generating_functions(numerator, expected):
    assert series_coefficients(numerator, PILLOW_GF_DENOMINATOR, len(expected)) == expected


def test_series_of_geometric_sum():
    assert series_coefficients([1], [1, -1], 4) == [1, 1, 1, 1]
    assert series_coefficients([1], [2], 2) == [Fraction(1, 2), 0]


def test_series_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        series_coefficients([1], [0, 1], 3)


@pytest.mark.parametrize("w", sorted(WINDOW_DECOMPOSITIONS))
def test_window_decomposition_at_zero_is_a_diamond(w):
    assert window_decomposition_value(w, 0) == aztec_power(w)


def test_window_decomposition_known_value():
    assert window_decomposition_value(6, 2) == 314703872


def test_window_polynomial_is_even_about_the_shift():
    points = [(x, window_decomposition_value(6, x)) for x in range(11)]
    fit = fit_polynomial(points)
    assert fit.kind == "POLYNOMIAL"
    assert fit.order == 8
    assert fit.coefficients[-1] == 8192
    assert window_evenness(fit.coefficients, 6)
    assert not window_evenness(fit.coefficients, 2)
    assert evaluate(fit.coefficients, 2) == 314703872


def test_unknown_window_width():
    with pytest.raises(ValueError):
        window_decomposition_value(12, 0)


@pytest.mark.slow
@pytest.mark.parametrize("w", [2, 4])
def test_window_counts_match_decomposition(w):
    for x in range(4):
        assert run_count(family="aztec-window", params={"x": x, "w": w}).count == window_decomposition_value(w, x)
