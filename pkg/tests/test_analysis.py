from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

import pytest

from src.analysis.factoring import (
    factorize,
    is_prime,
    prime_factors,
    render_factored,
    render_structure,
    roundness_report,
    square_free_part,
)
from src.analysis.formulas import invsum_closed_form, macmahon, vertical_moment_closed_form
from src.analysis.inverse_sum import inverse_entry_sum
from src.analysis.probabilities import (
    central_edge_probability,
    edge_probability,
    holey_ratio,
    moments_of_inertia,
    probability_table,
    render_probability,
)
from src.analysis.spectra import carlitz_cokernels, kasteleyn_cokernel, nontrivial_factors, render_poly, spectrum
from src.contracts.errors import EngineError, SizeLimitError
from src.contracts.models import HexagonSpec
from src.families.graphs import triangle_graph
from src.kasteleyn.orientation import sign_assignment
from src.linalg.snf import render_cokernel


@pytest.mark.parametrize(
    ("value", "factors", "structure"),
    [
        (1, (), "SQUARE"),
        (8, ((2, 3),), "TWO_TIMES_SQUARE"),
        (18, ((2, 1), (3, 2)), "POW2_TIMES_ODD_SQUARE(1)"),
        (20, ((2, 2), (5, 1)), "SQUARE_TIMES_SMALL(5)"),
        (37004, ((2, 2), (11, 1), (29, 2)), "SQUARE_TIMES_SMALL(11)"),
        (980, ((2, 2), (5, 1), (7, 2)), "SQUARE_TIMES_SMALL(5)"),
        (314703872, ((2, 17), (7, 4)), "POW2_TIMES_ODD_SQUARE(17)"),
        (6, ((2, 1), (3, 1)), "NONE"),
        (2 * 101, ((2, 1), (101, 1)), "NONE"),
    ],
)
def test_factorize_and_classify(value, factors, structure):
    factored = factorize(value)
    assert factored.factors == factors
    assert render_structure(factored) == structure


def test_render_factored():
    assert render_factored(factorize(2**2 * 3**6 * 13**2)) == "2^2 * 3^6 * 13^2"
    assert render_factored(factorize(1)) == "1"


def test_cofactor_above_trial_limit_is_prime():
    assert prime_factors(999983 * 1000003) == ((999983, 1), (1000003, 1))


def test_pollard_rho_splits_large_semiprime():
    small, large = 2**31 - 1, 2**61 - 1
    assert prime_factors(small * large) == ((small, 1), (large, 1))
    assert prime_factors(small**2) == ((small, 2),)


def test_primality_above_deterministic_bound():
    assert is_prime(2**89 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        prime_factors(0)


def test_square_free_part_ignores_powers_of_two():
    assert square_free_part(2**5 * 3**3 * 5**2 * 7) == 21


@pytest.mark.parametrize(("parameter", "outlier"), [(8, False), (7, True)])
def test_roundness_report(parameter, outlier):
    report = roundness_report(factorize(37004), parameter)
    assert report.largest_prime == 29
    assert report.ratio == Fraction(29, parameter)
    assert report.square_free == 11
    assert report.outlier is outlier


def test_roundness_of_one():
    report = roundness_report(factorize(1), 1)
    assert report.largest_prime is None and report.ratio is None and not report.outlier


def test_probabilities_sum_to_one_at_every_vertex(hexagon_plane):
    plane = hexagon_plane(2, 3, 2)
    totals = defaultdict(Fraction)
    for (black, white), probability in probability_table(plane).items():
        totals[black] += probability
        totals[white] += probability
    assert set(totals.values()) == {Fraction(1)}


def test_inverse_matches_deletion(hexagon_plane):
    table = probability_table(hexagon_plane(2), cross_check=True)
    assert len(table) == hexagon_plane(2).graph.number_of_edges()


def test_non_bipartite_table_uses_deletion():
    plane = triangle_graph(4)
    table = probability_table(plane)
    assert all(0 <= value <= 1 for value in table.values())
    assert sum(table.values()) == 5


def test_edge_probability_by_deletion(diamond_plane):
    plane = diamond_plane(1)
    black, white = (0, 0), (0, 1)
    assert edge_probability(plane, (black, white)) == Fraction(1, 2)


def test_missing_edge_probability_raises(diamond_plane):
    with pytest.raises(EngineError):
        edge_probability(diamond_plane(1), ((0, 0), (1, 1)))


def test_hexagon_probability_table_sorted():
    report = moments_of_inertia(2)
    assert [row.probability for row in report.rows] == [
        Fraction(7, 10),
        Fraction(3, 10),
        Fraction(3, 10),
        Fraction(3, 10),
        Fraction(2, 5),
        Fraction(2, 5),
        Fraction(3, 10),
        Fraction(3, 10),
        Fraction(3, 10),
        Fraction(7, 10),
    ]


@pytest.mark.parametrize(("n", "vertical"), [(1, 0), (2, 2), (3, 12), (4, 40), (5, 100)])
def test_vertical_moment(n, vertical):
    report = moments_of_inertia(n)
    assert report.vertical == vertical == vertical_moment_closed_form(n)
    assert report.regular


@pytest.mark.parametrize(
    ("n", "horizontal"),
    [
        (1, 1),
        (2, 18),
        (3, 93),
        pytest.param(4, 296, marks=pytest.mark.slow),
        pytest.param(5, 725, marks=pytest.mark.slow),
    ],
)
def test_horizontal_moment(n, horizontal):
    report = moments_of_inertia(n)
    assert report.horizontal == horizontal
    assert report.horizontal % n == 0


def test_non_regular_hexagon_is_flagged():
    assert not moments_of_inertia(HexagonSpec(a=1, b=2, c=3)).regular


@pytest.mark.parametrize(
    ("value", "digits", "text"),
    [
        (Fraction(7, 10), 2, ".7"),
        (Fraction(1, 3), 2, ".33"),
        (Fraction(2, 3), 2, ".67"),
        (Fraction(1), 2, "1"),
        (Fraction(0), 2, "0"),
        (Fraction(2, 3), 0, "1"),
    ],
)
def test_render_probability(value, digits, text):
    assert render_probability(value, digits) == text


@pytest.mark.parametrize("n", [1, 2])
def test_central_edge_is_one_third(n):
    assert central_edge_probability(n) == Fraction(1, 3)


@pytest.mark.slow
def test_central_edge_is_one_third_order_three():
    assert central_edge_probability(3) == Fraction(1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_holey_ratio_equals_edge_probability(n):
    report = holey_ratio(n)
    assert report.total == macmahon(HexagonSpec(a=n, b=n, c=n))
    assert report.ratio == report.probability
    assert report.excess == report.ratio - Fraction(1, 3)


def test_holey_ratio_order_one():
    report = holey_ratio(1)
    assert (report.holey_count, report.total) == (1, 2)
    assert report.excess == Fraction(1, 6)
    assert report.excess_denominator == "2 * 3"


@pytest.mark.parametrize(
    ("n", "expected"),
    [(1, 1), (2, Fraction(5, 2)), (3, 4), (4, Fraction(9, 2)), (5, 2), (6, Fraction(-15, 2))],
)
def test_inverse_entry_sum(n, expected):
    assert inverse_entry_sum(n) == expected == invsum_closed_form(n)


@pytest.mark.slow
@pytest.mark.parametrize(("n", "expected"), [(7, -32), (8, Fraction(-175, 2))])
def test_inverse_entry_sum_large_orders(n, expected):
    assert inverse_entry_sum(n) == expected == invsum_closed_form(n)


def test_inverse_entry_sum_is_capped():
    with pytest.raises(SizeLimitError):
        inverse_entry_sum(9)


def test_kasteleyn_cokernel_of_222():
    snf = kasteleyn_cokernel(HexagonSpec(a=2, b=2, c=2))
    assert render_cokernel(snf) == "Z/2 x Z/10"
    assert nontrivial_factors(snf) == (2, 10)


BOX_SIDES = [(a, b, c) for a in range(1, 5) for b in range(1, 5) for c in range(1, 5)]


@pytest.mark.parametrize(
    ("a", "b", "c"),
    [
        pytest.param(*sides, marks=pytest.mark.slow) if max(sides) == 4 else sides
        for sides in BOX_SIDES
    ],
)
def test_carlitz_cokernels_match_kasteleyn(a, b, c):
    spec = HexagonSpec(a=a, b=b, c=c)
    expected = nontrivial_factors(kasteleyn_cokernel(spec))
    for determinant, snf in carlitz_cokernels(spec):
        assert determinant == macmahon(spec)
        assert nontrivial_factors(snf) == expected


def test_spectrum_constant_term_is_det_squared(hexagon_plane):
    poly = spectrum(sign_assignment(hexagon_plane(2)))
    assert poly.degree() == 12
    assert abs(poly.all_coeffs()[-1]) == 20**2
    assert render_poly(poly).startswith("t**12")
