from __future__ import annotations

import random

import pytest

from src.contracts.errors import EngineError
from src.families.graphs import cube_graph, triangle_graph
from src.grid.dual import dual_graph
from src.grid.regions import parse_cell_complex
from src.kasteleyn.engines import count_det, pfaffian_count
from src.kasteleyn.orientation import (
    clockwise_violations,
    consistent_faces,
    edge_key,
    face_violations,
    kasteleyn_signs,
    pfaffian_orientation,
    regauge,
    sign_assignment,
    steps,
    vertical_domino_matrix,
    vertical_domino_signs,
)
from src.linalg.matrices import char_poly_gram, det_bareiss

STRIP_2X3 = """\
cell a black
cell b white
cell c black
cell d white
cell e black
cell f white
edge a b
edge b c
edge d e
edge e f
edge a d
edge b e
edge c f
face 1 6 3 5
face {second}
"""


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kasteleyn_signs_satisfy_face_condition(hexagon_plane, n):
    plane = hexagon_plane(n)
    assert face_violations(plane.faces, kasteleyn_signs(plane)) == []


def test_sign_assignment_is_deterministic(diamond_plane):
    assert sign_assignment(diamond_plane(3)) == sign_assignment(diamond_plane(3))


def test_unit_square_needs_one_negative_edge():
    faces = (("a", "b", "c", "d"),)
    signs = {edge_key(u, v): 1 for u, v in steps(faces[0])}
    assert face_violations(faces, signs) == [0]
    signs[edge_key("a", "b")] = -1
    assert face_violations(faces, signs) == []


def test_vertical_domino_signs_alternate_along_rows_and_columns(diamond_plane):
    signs = vertical_domino_signs(diamond_plane(2))
    assert signs[((0, 1), (1, 1))] == 1
    assert signs[((0, 2), (1, 2))] == -1
    assert signs[((1, 1), (2, 1))] == -1
    assert signs[((1, 2), (2, 2))] == 1
    assert signs[((1, 0), (1, 1))] == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vertical_domino_rule_counts_the_diamond(diamond_plane, n):
    assert count_det(vertical_domino_matrix(diamond_plane(n))) == 2 ** (n * (n + 1) // 2)


def test_regauging_preserves_determinant_and_spectrum(diamond_plane):
    matrix = sign_assignment(diamond_plane(3))
    base_det = abs(det_bareiss(matrix.to_domain()))
    base_poly = char_poly_gram(matrix.to_domain())
    rng = random.Random(7)
    size = len(matrix.black)
    for _ in range(10):
        rows = {i for i in range(size) if rng.random() < 0.5}
        cols = {j for j in range(size) if rng.random() < 0.5}
        flipped = regauge(matrix, rows, cols)
        assert abs(det_bareiss(flipped.to_domain())) == base_det == 64
        assert char_poly_gram(flipped.to_domain()) == base_poly


def test_regauge_flips_row_and_column_signs(diamond_plane):
    matrix = sign_assignment(diamond_plane(1))
    flipped = regauge(matrix, {0}, set())
    assert flipped.entries[0] == tuple(-value for value in matrix.entries[0])
    assert flipped.entries[1] == matrix.entries[1]
    assert regauge(matrix, {0, 1}, {0, 1}) == matrix


def test_provenance_maps_entries_to_edges(hexagon_plane):
    plane = hexagon_plane(1)
    matrix = sign_assignment(plane)
    provenance = matrix.provenance()
    assert len(provenance) == plane.graph.number_of_edges()
    assert all(plane.graph.has_edge(black, white) for black, white in provenance.values())


def test_pfaffian_orientation_of_triangle_graph():
    plane = triangle_graph(4)
    skew = pfaffian_orientation(plane)
    assert det_bareiss(skew.to_domain()) == 36
    assert all(skew.entries[i][j] == -skew.entries[j][i] for i in range(10) for j in range(10))


def test_pfaffian_orientation_is_clockwise_odd():
    plane = triangle_graph(5)
    skew = pfaffian_orientation(plane)
    direction = {}
    for i, tail in enumerate(skew.nodes):
        for j, head in enumerate(skew.nodes):
            if skew.entries[i][j] > 0:
                direction[edge_key(tail, head)] = (tail, head)
    assert clockwise_violations(plane.faces, direction) == []


@pytest.mark.parametrize("second", ["2 7 4 6", "6 4 7 2"])
def test_declared_faces_in_either_sense(second):
    plane = dual_graph(parse_cell_complex(STRIP_2X3.format(second=second)))
    faces = consistent_faces(plane)
    shared = [step for step in steps(faces[1]) if edge_key(*step) == edge_key("b", "e")]
    assert shared and shared[0] not in steps(faces[0])
    assert pfaffian_count(plane) == 3
    assert count_det(sign_assignment(plane)) == 3


def test_signs_need_an_embedding():
    with pytest.raises(EngineError):
        kasteleyn_signs(cube_graph(2))


def test_signs_need_a_bipartition():
    with pytest.raises(EngineError):
        sign_assignment(triangle_graph(4))


def test_pfaffian_orientation_needs_an_embedding():
    with pytest.raises(EngineError):
        pfaffian_orientation(cube_graph(3))
