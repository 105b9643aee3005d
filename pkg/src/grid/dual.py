"""Dual graphs of regions: one vertex per cell, one edge per shared side."""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from config.constants import MSG_EMPTY_REGION
from src.contracts.errors import RegionValidationError
from src.grid.embedding import Point, declared_faces
from src.grid.plane import BLACK, WHITE, Color, PlaneGraph, embedded_graph, make_graph
from src.grid.regions import CellComplex, SquareRegion, TriRegion
from src.utils.logging import log_event

Region = TriRegion | SquareRegion | CellComplex


def tri_position(row: int, col: int, orientation: str) -> Point:
    """Centroid of a unit triangle in math orientation, columns at unit spacing."""
    depth = Fraction(2, 3) if orientation == "UP" else Fraction(1, 3)
    return (Fraction(col), -(row + depth))


def _tri_dual(region: TriRegion) -> PlaneGraph:
    """UP (r,c) touches DOWN at (r,c-1), (r,c+1) and (r+1,c)."""
    lookup = region.orientation_map()
    nodes: dict[tuple[int, int], Color | None] = {
        position: BLACK if orientation == "UP" else WHITE for position, orientation in lookup.items()
    }
    edges = []
    for (row, col), orientation in lookup.items():
        if orientation != "UP":
            continue
        for neighbor in ((row, col - 1), (row, col + 1), (row + 1, col)):
            if lookup.get(neighbor) == "DOWN":
                edges.append(((row, col), neighbor))
    graph = make_graph(nodes, edges)
    positions = {
        position: tri_position(*position, orientation) for position, orientation in lookup.items()
    }
    return embedded_graph(graph, positions)


def _square_dual(region: SquareRegion) -> PlaneGraph:
    """4-neighborhood adjacency, checkerboard colors."""
    nodes: dict[tuple[int, int], Color | None] = {cell: region.color(cell) for cell in region.cells}
    edges = []
    for row, col in region.cells:
        for neighbor in ((row, col + 1), (row + 1, col)):
            if neighbor in region.cells:
                edges.append(((row, col), neighbor))
    graph = make_graph(nodes, edges)
    positions = {(row, col): (Fraction(col), Fraction(-row)) for row, col in region.cells}
    return embedded_graph(graph, positions)


def _complex_dual(region: CellComplex) -> PlaneGraph:
    """Declared edges; faces only when declared."""
    nodes: dict[str, Color | None] = {cell.id: cell.color for cell in region.cells}
    edges: dict[tuple[str, str], Fraction] = {}
    for edge in region.edges:
        key = (edge.a, edge.b) if (edge.b, edge.a) not in edges else (edge.b, edge.a)
        edges[key] = edges.get(key, Fraction(0)) + edge.weight
    graph = make_graph(nodes, edges)
    if all(color is None for color in nodes.values()) and nx.is_bipartite(graph):
        for node, side in nx.bipartite.color(graph).items():
            graph.nodes[node]["color"] = BLACK if side == 0 else WHITE
    if region.faces is None:
        return PlaneGraph(graph=graph)
    walks = declared_faces(graph, [(edge.a, edge.b) for edge in region.edges], region.faces)
    plane = PlaneGraph(graph=graph, faces=tuple(walks))
    if not plane.euler_holds():
        raise RegionValidationError("declared faces do not satisfy Euler's relation")
    return plane


def dual_graph(region: Region) -> PlaneGraph:
    """Dual graph with colors, weights and (when known) the embedding's faces."""
    if not region.cells:
        raise RegionValidationError(MSG_EMPTY_REGION)
    if isinstance(region, TriRegion):
        plane = _tri_dual(region)
    elif isinstance(region, SquareRegion):
        plane = _square_dual(region)
    else:
        plane = _complex_dual(region)
    log_event(
        "dual_built",
        vertices=plane.graph.number_of_nodes(),
        edges=plane.graph.number_of_edges(),
        black=len(plane.black),
        white=len(plane.white),
        planar=plane.planar,
    )
    return plane
