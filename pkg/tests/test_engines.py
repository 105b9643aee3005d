from __future__ import annotations

from fractions import Fraction

import pytest

from src.analysis.formulas import aztec_power, macmahon
from src.contracts.errors import EngineError, SizeLimitError
from src.contracts.models import AztecSpec, HexagonSpec
from src.families.aztec import aztec
from src.families.graphs import cube_graph, triangle_graph
from src.families.hexagons import hexagon
from src.families.quasi import quasi_hexagon
from src.grid.dual import dual_graph
from src.grid.regions import parse_cell_complex
from src.kasteleyn.engines import brute_force_count, count_matchings, permanent_ryser, pfaffian_count

WEIGHTED_SQUARE = """\
cell a black
cell b white
cell c black
cell d white
edge a b 2
edge b c
edge c d
edge d a
face 1 2 3 4
"""


def _square_plane(spec: AztecSpec):
    return dual_graph(aztec(spec))


@pytest.mark.parametrize(("a", "b", "c"), [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 2, 3), (2, 3, 2)])
def test_engines_agree_on_small_hexagons(hexagon_plane, a, b, c):
    plane = hexagon_plane(a, b, c)
    counts = {engine: count_matchings(plane, engine)[0] for engine in ("det", "pfaffian", "permanent", "brute")}
    assert set(counts.values()) == {macmahon(HexagonSpec(a=a, b=b, c=c))}


@pytest.mark.parametrize(("n", "expected"), [(1, 2), (2, 20), (3, 980)])
def test_macmahon_regular_hexagons(hexagon_plane, n, expected):
    count, engine = count_matchings(hexagon_plane(n))
    assert engine == "det"
    assert count == expected


@pytest.mark.slow
@pytest.mark.parametrize(("a", "b", "c"), [(3, 3, 3), (2, 3, 4), (4, 4, 4)])
def test_macmahon_larger_hexagons(hexagon_plane, a, b, c):
    assert count_matchings(hexagon_plane(a, b, c))[0] == macmahon(HexagonSpec(a=a, b=b, c=c))


@pytest.mark.parametrize(
    "n", [*range(1, 7), pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)]
)
def test_aztec_diamond_power_of_two(diamond_plane, n):
    assert count_matchings(diamond_plane(n))[0] == aztec_power(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_aztec_diamond_all_engines(diamond_plane, n):
    plane = diamond_plane(n)
    assert pfaffian_count(plane) == brute_force_count(plane) == permanent_ryser(plane) == aztec_power(n)


@pytest.mark.parametrize(("n", "expected"), [(1, 0), (2, 0), (3, 2), (4, 6), (5, 0), (6, 0), (7, 2196), (8, 37004)])
def test_triangle_graph_counts(n, expected):
    count, engine = count_matchings(triangle_graph(n))
    assert engine == "pfaffian"
    assert count == expected


def test_triangle_graph_brute_force_agrees():
    assert brute_force_count(triangle_graph(4)) == 6
    assert brute_force_count(triangle_graph(7)) == 2196


@pytest.mark.parametrize(("n", "expected"), [(1, 1), (2, 2), (3, 9), (4, 272)])
def test_cube_counts(n, expected):
    count, engine = count_matchings(cube_graph(n))
    assert engine == "permanent"
    assert count == expected


@pytest.mark.slow
def test_five_cube():
    assert count_matchings(cube_graph(5))[0] == 589185


@pytest.mark.parametrize(
    ("spec", "expected"),
    [
        (AztecSpec(kind="INTRUDED_SQUARE", n=2), 18),
        (AztecSpec(kind="INTRUDED_SQUARE", n=4), 2**2 * 3**6 * 13**2),
        (AztecSpec(kind="INTRUDED_SQUARE", n=3, m=3), 1),
        (AztecSpec(kind="INTRUDED_SQUARE", n=5, m=5), 1),
        (AztecSpec(kind="PILLOW_0MOD4", n=1), 5),
        (AztecSpec(kind="PILLOW_0MOD4", n=2), 117),
        (AztecSpec(kind="PILLOW_2MOD4", n=1), 2),
        (AztecSpec(kind="PILLOW_2MOD4", n=2), 20),
        (AztecSpec(kind="WINDOW", x=0, w=2), 8),
    ],
)
def test_square_lattice_counts(spec, expected):
    assert count_matchings(_square_plane(spec))[0] == expected


def test_window_count():
    count, _ = count_matchings(_square_plane(AztecSpec(kind="WINDOW", x=2, w=6)))
    assert count == 314703872 == 2**17 * 7**4


def test_quasi_hexagon_count():
    plane = dual_graph(quasi_hexagon(HexagonSpec(a=2, b=3, c=2)))
    assert plane.planar and plane.bipartite
    assert count_matchings(plane)[0] == 17920


def test_unbalanced_region_has_no_matchings():
    region = hexagon(HexagonSpec(a=2, b=2, c=2))
    up_cell = next((row, col) for row, col, orientation in region.cells if orientation == "UP")
    plane = dual_graph(region.remove(up_cell))
    assert count_matchings(plane)[0] == 0
    assert brute_force_count(plane) == 0


def test_weighted_square_sums_weights():
    plane = dual_graph(parse_cell_complex(WEIGHTED_SQUARE))
    for engine in ("det", "pfaffian", "permanent", "brute"):
        assert count_matchings(plane, engine)[0] == 3


def test_weighted_rational_sum():
    plane = dual_graph(parse_cell_complex(WEIGHTED_SQUARE.replace("edge b c", "edge b c 1/3")))
    assert count_matchings(plane)[0] == 2 + Fraction(1, 3)
    assert brute_force_count(plane, weighted=True) == Fraction(7, 3)


def test_forced_det_needs_planar_bipartite():
    with pytest.raises(EngineError):
        count_matchings(cube_graph(3), "det")
    with pytest.raises(EngineError):
        count_matchings(triangle_graph(4), "det")


def test_pfaffian_needs_an_embedding():
    with pytest.raises(EngineError):
        count_matchings(cube_graph(3), "pfaffian")


def test_permanent_needs_a_bipartition():
    with pytest.raises(EngineError):
        permanent_ryser(triangle_graph(4))


def test_brute_force_size_limit(diamond_plane):
    with pytest.raises(SizeLimitError):
        brute_force_count(diamond_plane(5))


def test_permanent_size_limit(diamond_plane):
    with pytest.raises(SizeLimitError):
        permanent_ryser(diamond_plane(6))


@pytest.mark.parametrize(
    "region",
    [
        hexagon(HexagonSpec(a=2, b=2, c=2)),
        hexagon(HexagonSpec(a=1, b=2, c=3)),
        aztec(AztecSpec(kind="DIAMOND", n=3)),
        aztec(AztecSpec(kind="KNIGHT_PAIR_REMOVED", n=3)),
    ],
    ids=["hexagon-222", "hexagon-123", "diamond-3", "knight-3"],
)
def test_removing_an_edge_pair_never_adds_matchings(region):
    plane = dual_graph(region)
    total, _ = count_matchings(plane)
    through = {}
    for u, v in plane.graph.edges:
        through[(u, v)], _ = count_matchings(dual_graph(region.remove(u, v)))
        assert 0 <= through[(u, v)] <= total
    # every matching covers a vertex exactly once
    corner = min(plane.graph.nodes)
    assert sum(count for edge, count in through.items() if corner in edge) == total
