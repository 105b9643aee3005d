"""Quasi-hexagons: square grid sliced along every third up-diagonal."""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from src.contracts.models import HexagonSpec
from src.grid.embedding import Point, geometric_faces
from src.grid.regions import CellComplex, ComplexCell, ComplexEdge

GridPoint = tuple[int, int]
Segment = frozenset[GridPoint]

_W = (1, -1)
_U_PATH = ((1, 0), (1, 1), (2, 1))
_V_PATH = ((0, 1), (1, 1), (1, 2))


def _walk(start: GridPoint, path: tuple[GridPoint, ...], sign: int) -> list[GridPoint]:
    """Fine vertices of one coarse step, forwards (sign 1) or reversed (sign -1)."""
    if sign > 0:
        return [(start[0] + dx, start[1] + dy) for dx, dy in path]
    end = (start[0] - path[-1][0], start[1] - path[-1][1])
    reversed_points = [(end[0] + dx, end[1] + dy) for dx, dy in path[-2::-1]]
    return reversed_points + [end]


def boundary(spec: HexagonSpec) -> list[GridPoint]:
    """Closed fine boundary (y down): sides b*w, c*u, a*v, -b*w, -c*u, -a*v."""
    x0 = (1 - spec.b) % 3
    points: list[GridPoint] = [(x0, spec.b)]
    plan = (
        (spec.b, (_W,), 1),
        (spec.c, _U_PATH, 1),
        (spec.a, _V_PATH, 1),
        (spec.b, (_W,), -1),
        (spec.c, _U_PATH, -1),
        (spec.a, _V_PATH, -1),
    )
    for repeats, path, sign in plan:
        for _ in range(repeats):
            points.extend(_walk(points[-1], path, sign))
    if points[-1] != points[0]:
        raise ValueError("quasi-hexagon boundary does not close")
    return points[:-1]


def _inside(point: Point, polygon: list[GridPoint]) -> bool:
    """Even-odd ray casting with exact arithmetic."""
    x, y = point
    inside = False
    for index, (x1, y1) in enumerate(polygon):
        x2, y2 = polygon[(index + 1) % len(polygon)]
        if (y1 > y) != (y2 > y):
            crossing = x1 + (y - y1) * Fraction(x2 - x1, 1) / (y2 - y1)
            if x < crossing:
                inside = not inside
    return inside


def _pieces(col: int, row: int) -> list[tuple[str, str, Point, list[Segment]]]:
    """Pieces of one unit square: (id, color, centroid, sides)."""
    top = frozenset({(col, row), (col + 1, row)})
    left = frozenset({(col, row), (col, row + 1)})
    right = frozenset({(col + 1, row), (col + 1, row + 1)})
    bottom = frozenset({(col, row + 1), (col + 1, row + 1)})
    residue = (col + row) % 3
    if residue == 0:
        diagonal = frozenset({(col, row + 1), (col + 1, row)})
        return [
            (f"u{col}.{row}", "BLACK", (col + Fraction(1, 3), row + Fraction(1, 3)), [top, left, diagonal]),
            (f"l{col}.{row}", "WHITE", (col + Fraction(2, 3), row + Fraction(2, 3)), [right, bottom, diagonal]),
        ]
    color = "BLACK" if residue == 1 else "WHITE"
    return [(f"s{col}.{row}", color, (col + Fraction(1, 2), row + Fraction(1, 2)), [top, left, right, bottom])]


def quasi_hexagon(spec: HexagonSpec) -> CellComplex:
    """Diform dissection inside the a,b,c quasi-hexagon, with faces from its drawing."""
    polygon = boundary(spec)
    xs = [x for x, _ in polygon]
    ys = [y for _, y in polygon]
    cells: list[ComplexCell] = []
    owners: dict[Segment, list[str]] = {}
    positions: dict[str, Point] = {}
    for row in range(min(ys), max(ys)):
        for col in range(min(xs), max(xs)):
            for piece_id, color, centroid, sides in _pieces(col, row):
                if not _inside(centroid, polygon):
                    continue
                cells.append(ComplexCell(id=piece_id, color=color))
                positions[piece_id] = (centroid[0], -centroid[1])
                for side in sides:
                    owners.setdefault(side, []).append(piece_id)
    pairs = sorted(tuple(sorted(ids)) for ids in owners.values() if len(ids) == 2)
    edges = [ComplexEdge(a=a, b=b) for a, b in pairs]

    graph = nx.Graph()
    graph.add_nodes_from(sorted(positions))
    graph.add_edges_from(pairs)
    bounded, _ = geometric_faces(graph, positions)
    index = {frozenset(pair): number for number, pair in enumerate(pairs, start=1)}
    faces = tuple(
        tuple(index[frozenset((walk[i], walk[(i + 1) % len(walk)]))] for i in range(len(walk)))
        for walk in bounded
    )
    return CellComplex(
        cells=tuple(sorted(cells, key=lambda cell: cell.id)),
        edges=tuple(edges),
        faces=faces,
    )
