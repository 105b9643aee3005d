from __future__ import annotations

import pytest
from pydantic import ValidationError

from src.contracts.errors import MatchworkError, SizeLimitError, UnknownFamilyError, UnknownFormulaError
from src.contracts.models import AztecSpec, HexagonSpec
from src.families.aztec import aztec, rectangle
from src.families.graphs import cube_graph, triangle_graph
from src.families.hexagons import central_pair, hexagon, hexagon_frame, holey_hexagon
from src.families.registry import FAMILIES, build_family, get_family
from src.grid.dual import dual_graph
from src.grid.regions import SquareRegion, TriRegion


@pytest.mark.parametrize(("a", "b", "c"), [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 1, 2), (2, 3, 2)])
def test_hexagon_cell_counts(a, b, c):
    region = hexagon(HexagonSpec(a=a, b=b, c=c))
    assert len(region.cells) == 2 * (a * b + b * c + c * a)
    assert region.up_count == region.down_count


def test_hexagon_111_matches_text_encoding():
    assert hexagon(HexagonSpec(a=1, b=1, c=1)).orientation_map() == {
        (0, 0): "UP",
        (0, 1): "DOWN",
        (0, 2): "UP",
        (1, 0): "DOWN",
        (1, 1): "UP",
        (1, 2): "DOWN",
    }


def test_unclosed_hexagon_frame_is_rejected():
    with pytest.raises(ValueError):
        hexagon_frame((1, 2, 1, 1, 1, 1))


@pytest.mark.parametrize("kind", ["CENTRAL_TRIANGLE", "THREE_SIDES", "OPPOSITE_PAIR", "ADJACENT_PAIR"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_holey_hexagons_are_balanced(kind, n):
    region = holey_hexagon(kind, n)
    assert region.up_count == region.down_count


def test_central_edge_hexagon_marks_an_adjacent_pair():
    region = holey_hexagon("CENTRAL_EDGE_HEX", 2)
    first, second = region.marked
    lookup = region.orientation_map()
    assert {lookup[first], lookup[second]} == {"UP", "DOWN"}
    plane = dual_graph(region)
    assert plane.graph.has_edge(first, second)


def test_adjacent_pair_is_an_edge_of_the_full_hexagon(hexagon_plane):
    up, down = central_pair(3)
    assert hexagon_plane(3).graph.has_edge(up, down)
    assert holey_hexagon("ADJACENT_PAIR", 3).cells == hexagon(HexagonSpec(a=3, b=3, c=3)).remove(up, down).cells


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_diamond_cell_count(n):
    assert len(aztec(AztecSpec(kind="DIAMOND", n=n)).cells) == 2 * n * (n + 1)


def test_window_cell_count():
    assert len(aztec(AztecSpec(kind="WINDOW", x=2, w=6)).cells) == 132


@pytest.mark.parametrize(
    "spec",
    [
        AztecSpec(kind="CENTER_PAIR_REMOVED", n=3),
        AztecSpec(kind="KNIGHT_PAIR_REMOVED", n=3),
        AztecSpec(kind="RECT_CENTER_HOLE", n=1),
        AztecSpec(kind="RECT_CENTER_HOLE", n=2),
        AztecSpec(kind="RECT_ADJACENT_HOLE", n=1),
        AztecSpec(kind="RECT_ADJACENT_HOLE", n=2),
        AztecSpec(kind="INTRUDED_SQUARE", n=4),
        AztecSpec(kind="INTRUDED_SQUARE", n=3, m=3),
        AztecSpec(kind="PILLOW_0MOD4", n=2),
        AztecSpec(kind="PILLOW_2MOD4", n=3),
    ],
)
def test_square_lattice_families_are_color_balanced(spec):
    region = aztec(spec)
    assert region.black_count == region.white_count


def test_intruded_square_removes_two_cells_per_step():
    region = aztec(AztecSpec(kind="INTRUDED_SQUARE", n=4))
    assert len(region.cells) == 64 - 2 * 2
    assert (7, 0) not in region.cells and (6, 2) not in region.cells


@pytest.mark.parametrize(
    "params",
    [
        {"kind": "WINDOW", "x": 1, "w": 3},
        {"kind": "INTRUDED_SQUARE", "n": 3},
        {"kind": "INTRUDED_SQUARE", "n": 2, "m": 3},
        {"kind": "KNIGHT_PAIR_REMOVED", "n": 1},
        {"kind": "DIAMOND", "n": 0},
    ],
)
def test_invalid_aztec_parameters(params):
    with pytest.raises(ValidationError):
        AztecSpec(**params)


def test_rectangle():
    region = rectangle(2, 4)
    assert isinstance(region, SquareRegion)
    assert len(region.cells) == 8


@pytest.mark.parametrize("n", [1, 3, 4, 7])
def test_triangle_graph_shape(n):
    plane = triangle_graph(n)
    assert plane.graph.number_of_nodes() == n * (n + 1) // 2
    assert plane.graph.number_of_edges() == 3 * n * (n - 1) // 2
    assert plane.planar and not plane.bipartite
    assert plane.euler_holds()


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_cube_graph_shape(n):
    plane = cube_graph(n)
    assert plane.graph.number_of_nodes() == 2**n
    assert plane.graph.number_of_edges() == n * 2 ** (n - 1)
    assert plane.bipartite and not plane.planar


@pytest.mark.parametrize("n", [0, 6])
def test_cube_dimension_is_capped(n):
    with pytest.raises(SizeLimitError):
        cube_graph(n)


def test_registry_names_are_unique_and_buildable():
    for name in FAMILIES:
        assert get_family(name).name == name
    assert isinstance(build_family("hexagon", {"a": 1, "b": 2, "c": 3}), TriRegion)
    assert len(build_family("hexagon", {"n": 2}).cells) == 24
    assert len(build_family("aztec-window", {"x": 2, "w": 6}).cells) == 132
    assert len(build_family("intruded-square").cells) == 14


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        build_family("moebius-strip")


def test_unknown_family_is_not_an_unknown_formula():
    with pytest.raises(UnknownFamilyError, match="moebius-strip") as caught:
        get_family("moebius-strip")
    assert not isinstance(caught.value, UnknownFormulaError)
    assert isinstance(caught.value, MatchworkError)
