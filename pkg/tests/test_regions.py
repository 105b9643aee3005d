from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from src.contracts.errors import RegionParseError, RegionValidationError
from src.data.repository import get_region
from src.grid.dual import dual_graph
from src.grid.embedding import declared_faces
from src.grid.regions import (
    SquareRegion,
    TriRegion,
    parse_cell_complex,
    parse_square_region,
    parse_tri_region,
    parse_weight,
    serialize_region,
)

HEXAGON_111 = "AVA\nVAV\n"
WEIGHTED_SQUARE = """\
cell a black
cell b white
cell c black
cell d white
edge a b 2
edge b c
edge c d   # unit weight
edge d a
face 1 2 3 4
"""


def test_parse_tri_region_uses_absolute_columns():
    region = parse_tri_region(HEXAGON_111)
    assert region.up_count == 3
    assert region.down_count == 3
    assert region.orientation_map()[(0, 0)] == "UP"
    assert region.orientation_map()[(1, 0)] == "DOWN"


def test_blank_lines_are_ignored():
    assert parse_tri_region("\nAVA\n\nVAV\n\n") == parse_tri_region(HEXAGON_111)


def test_hexagon_111_dual_is_a_hexagon():
    plane = dual_graph(parse_tri_region(HEXAGON_111))
    assert plane.graph.number_of_nodes() == 6
    assert plane.graph.number_of_edges() == 6
    assert plane.bipartite and plane.planar and plane.balanced
    assert plane.euler_holds()
    assert len(plane.faces) == 1


@pytest.mark.parametrize(
    ("text", "row", "col"),
    [("AVx\n", 0, 2), ("AVA\nV.V\n", 1, 1)],
)
def test_unknown_character_reports_position(text, row, col):
    with pytest.raises(RegionParseError) as excinfo:
        parse_tri_region(text)
    assert (excinfo.value.row, excinfo.value.col) == (row, col)


def test_square_region_parse_and_colors():
    region = parse_square_region("XX\nXX\n")
    assert region.black_count == region.white_count == 2
    assert SquareRegion.color((0, 0)) != SquareRegion.color((0, 1))


def test_square_region_rejects_other_characters():
    with pytest.raises(RegionParseError):
        parse_square_region("XA\n")


def test_serialize_translates_to_origin():
    region = SquareRegion(cells=frozenset({(3, 5), (3, 6)}))
    assert serialize_region(region) == "XX\n"
    assert parse_square_region(serialize_region(region)) == SquareRegion(cells=frozenset({(0, 0), (0, 1)}))


def test_serialize_tri_region_keeps_relative_columns():
    region = parse_tri_region(" AV\nAVA\n")
    assert serialize_region(region) == " AV\nAVA\n"


def test_cell_complex_with_weights_and_faces():
    region = parse_cell_complex(WEIGHTED_SQUARE)
    assert [cell.id for cell in region.cells] == ["a", "b", "c", "d"]
    assert region.edges[0].weight == Fraction(2)
    assert region.faces == ((1, 2, 3, 4),)
    plane = dual_graph(region)
    assert plane.planar and plane.bipartite and plane.weighted


def test_cell_complex_without_faces_has_no_embedding():
    region = parse_cell_complex("cell a\ncell b\nedge a b 1/2\n")
    plane = dual_graph(region)
    assert not plane.planar
    assert plane.weight("a", "b") == Fraction(1, 2)
    # uncolored bipartite complexes are 2-colored automatically
    assert plane.bipartite


@pytest.mark.parametrize(
    "text",
    [
        "cell a\nedge a b\n",
        "cell a black\ncell b black\nedge a b\n",
        "cell a\ncell a\n",
        "cell a\ncell b\nedge a b 0\n",
        "cell a\ncell b\nedge a b 1/0\n",
        "cell a\ncell b\nedge a b\nface x\n",
        "vertex a\n",
        "cell a purple\n",
    ],
)
def test_cell_complex_errors(text):
    with pytest.raises(RegionParseError):
        parse_cell_complex(text)


def test_face_out_of_range_is_a_validation_error():
    with pytest.raises(RegionValidationError):
        parse_cell_complex("cell a\ncell b\nedge a b\nface 1 2\n")


@pytest.mark.parametrize(("token", "value"), [("3", Fraction(3)), ("3/4", Fraction(3, 4))])
def test_parse_weight(token, value):
    assert parse_weight(token) == value


def test_empty_region_has_no_dual():
    with pytest.raises(RegionValidationError):
        dual_graph(TriRegion(cells=frozenset()))


def test_remove_missing_position_fails():
    with pytest.raises((RegionValidationError, ValueError)):
        parse_tri_region(HEXAGON_111).remove((5, 5))


def test_repository_dispatches_on_extension(region_file):
    tri = get_region(region_file("hex.vax", HEXAGON_111))
    square = get_region(region_file("sq.xreg", "XX\n"))
    complex_ = get_region(region_file("w.cells", WEIGHTED_SQUARE))
    assert isinstance(tri, TriRegion)
    assert isinstance(square, SquareRegion)
    assert len(complex_.edges) == 4


def test_repository_rejects_unknown_extension(region_file):
    with pytest.raises(RegionParseError):
        get_region(region_file("region.txt", "XX\n"))


def test_declared_faces_use_one_based_edge_indices():
    graph = nx.cycle_graph(["a", "b", "c", "d"])
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
    assert declared_faces(graph, edges, [(1, 2, 3, 4)]) == [("a", "b", "c", "d")]
    assert declared_faces(graph, edges, [(4, 1, 2, 3)]) == [("d", "a", "b", "c")]


def test_weighted_square_file_builds_its_declared_face(region_file):
    plane = dual_graph(get_region(region_file("weighted.cells", WEIGHTED_SQUARE)))
    assert plane.faces == (("a", "b", "c", "d"),)
