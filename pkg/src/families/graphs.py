"""Graph families given directly as graphs: triangle graphs and n-cubes."""

from __future__ import annotations

from fractions import Fraction

from config.constants import MSG_SIZE_LIMIT
from config.settings import settings
from src.contracts.errors import SizeLimitError
from src.grid.plane import BLACK, WHITE, PlaneGraph, embedded_graph, make_graph


def triangle_graph(n: int) -> PlaneGraph:
    """Triangular grid with rows of 1, 2, ..., n vertices, drawn with straight lines."""
    if n < 1:
        raise ValueError(f"family index must be positive, got {n}")
    nodes = {(i, j): None for i in range(n) for j in range(i + 1)}
    edges = []
    for i, j in nodes:
        for neighbor in ((i, j + 1), (i + 1, j), (i + 1, j + 1)):
            if neighbor in nodes:
                edges.append(((i, j), neighbor))
    positions = {(i, j): (Fraction(2 * j - i), Fraction(-i)) for i, j in nodes}
    return embedded_graph(make_graph(nodes, edges), positions)


def cube_graph(n: int) -> PlaneGraph:
    """n-bit strings joined at Hamming distance 1, colored by bit parity; no embedding."""
    if not 1 <= n <= settings.CUBE_MAX_DIMENSION:
        raise SizeLimitError(
            MSG_SIZE_LIMIT.format(what="cube dimension", value=n, limit=settings.CUBE_MAX_DIMENSION)
        )
    nodes = {
        vertex: BLACK if bin(vertex).count("1") % 2 == 0 else WHITE for vertex in range(2**n)
    }
    edges = [(vertex, vertex ^ (1 << bit)) for vertex in range(2**n) for bit in range(n) if not vertex & (1 << bit)]
    return PlaneGraph(graph=make_graph(nodes, edges))
