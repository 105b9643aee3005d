"""Edge probabilities, moments of inertia and the holey-hexagon ratio."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable

from sympy.polys.matrices import DomainMatrix

from config.constants import MSG_ZERO_MATCHINGS
from src.contracts.errors import EngineError, SingularMatrixError
from src.contracts.models import HexagonSpec, HoleyRatioReport, MomentReport, MomentRow
from src.families.hexagons import central_pair, hexagon, holey_hexagon
from src.grid.dual import dual_graph
from src.grid.plane import PlaneGraph
from src.kasteleyn.engines import count_matchings
from src.kasteleyn.orientation import KasteleynMatrix, sign_assignment
from src.linalg.matrices import inverse_rational, to_fraction
from src.analysis.factoring import factorize, render_factored
from src.analysis.formulas import macmahon
from src.utils.logging import log_event

Node = Hashable
Edge = tuple[Node, Node]


def _as_fraction(value: int | Fraction) -> Fraction:
    """Counts come back as int or Fraction."""
    return Fraction(value)


def edge_probability(plane: PlaneGraph, edge: Edge, total: int | Fraction | None = None) -> Fraction:
    """count(G minus both endpoints) * weight / count(G), by deletion."""
    u, v = edge
    if not plane.graph.has_edge(u, v):
        raise EngineError(f"edge {edge!r} is not in the graph")
    if total is None:
        total, _ = count_matchings(plane)
    if not total:
        raise EngineError(MSG_ZERO_MATCHINGS)
    rest, _ = count_matchings(plane.without(u, v))
    return _as_fraction(rest) * plane.weight(u, v) / _as_fraction(total)


def inverse_matrix(matrix: KasteleynMatrix) -> DomainMatrix:
    """Exact K^-1 (white rows, black columns)."""
    if not matrix.square:
        raise EngineError(MSG_ZERO_MATCHINGS)
    return inverse_rational(matrix.to_domain())


def inverse_kasteleyn_probability(
    matrix: KasteleynMatrix, inverse: DomainMatrix, black: Node, white: Node
) -> Fraction:
    """|K[b, w] * K^-1[w, b]|."""
    i, j = matrix.black.index(black), matrix.white.index(white)
    return abs(matrix.entries[i][j] * to_fraction(inverse.to_list()[j][i]))


def probability_table(plane: PlaneGraph, cross_check: bool = False) -> dict[Edge, Fraction]:
    """Probability of every edge, keyed (black, white) when bipartite.

    Planar bipartite graphs use one inverse of K; other graphs fall back to
    deletion. With cross_check the deletion method must agree exactly.
    """
    if plane.planar and plane.bipartite:
        matrix = sign_assignment(plane)
        try:
            inverse = inverse_matrix(matrix)
        except SingularMatrixError as exc:
            raise EngineError(MSG_ZERO_MATCHINGS) from exc
        rows = inverse.to_list()
        table = {}
        for i, black in enumerate(matrix.black):
            for j, white in enumerate(matrix.white):
                if matrix.entries[i][j]:
                    table[(black, white)] = abs(matrix.entries[i][j] * to_fraction(rows[j][i]))
    else:
        total, _ = count_matchings(plane)
        table = {}
        for u, v in sorted(plane.graph.edges):
            key = (v, u) if plane.color(u) == "WHITE" else (u, v)
            table[key] = edge_probability(plane, key, total)
    if cross_check:
        total, _ = count_matchings(plane)
        for edge, probability in table.items():
            by_deletion = edge_probability(plane, edge, total)
            if by_deletion != probability:
                raise EngineError(
                    f"edge {edge!r}: deletion gives {by_deletion}, inverse gives {probability}"
                )
    log_event("probabilities_computed", edges=len(table), cross_check=cross_check)
    return table


def render_probability(value: Fraction, digits: int) -> str:
    """Decimal rendering in the '.7' style: leading zero dropped, trailing zeros trimmed."""
    scaled = round(value * 10**digits)
    whole, rest = divmod(scaled, 10**digits)
    if not digits:
        return str(whole)
    text = f"{rest:0{digits}d}".rstrip("0")
    if not text:
        return str(whole)
    return f".{text}" if whole == 0 else f"{whole}.{text}"


def _horizontal_edges(plane: PlaneGraph) -> dict[Edge, tuple[int, int]]:
    """Edges UP(r, c) - DOWN(r+1, c) with their (row, column) of the UP cell."""
    edges = {}
    for u, v in plane.graph.edges:
        up, down = (u, v) if plane.color(u) == "BLACK" else (v, u)
        if down == (up[0] + 1, up[1]):
            edges[(up, down)] = up
    return edges


def moments_of_inertia(spec: HexagonSpec | int) -> MomentReport:
    """Horizontal-edge table and sum p*x^2, sum p*y^2 with coordinates centered at 0.

    x is the row of the edge and y its column; for hexagon(n,n,n) these are
    consecutive integers. Other hexagons use the same geometric centering,
    which may give half-integers, and are flagged as not regular.
    """
    if isinstance(spec, int):
        spec = HexagonSpec(a=spec, b=spec, c=spec)
    plane = dual_graph(hexagon(spec))
    table = probability_table(plane)
    positions = _horizontal_edges(plane)
    rows_seen = [row for row, _ in positions.values()]
    cols_seen = [col for _, col in positions.values()]
    row_center = Fraction(min(rows_seen) + max(rows_seen), 2)
    col_center = Fraction(min(cols_seen) + max(cols_seen), 2)
    rows = sorted(
        (
            MomentRow(
                edge=edge,
                probability=table[edge],
                x=Fraction(row) - row_center,
                y=Fraction(col) - col_center,
            )
            for edge, (row, col) in positions.items()
        ),
        key=lambda item: (item.y, item.x),
    )
    vertical = sum((row.probability * row.x**2 for row in rows), Fraction(0))
    horizontal = sum((row.probability * row.y**2 for row in rows), Fraction(0))
    regular = spec.a == spec.b == spec.c
    log_event("moments_computed", a=spec.a, b=spec.b, c=spec.c, vertical=vertical, horizontal=horizontal)
    return MomentReport(rows=tuple(rows), vertical=vertical, horizontal=horizontal, regular=regular)


def central_edge_probability(n: int) -> Fraction:
    """Probability of the marked central edge of hexagon(2n-1, 2n, 2n-1)."""
    region = holey_hexagon("CENTRAL_EDGE_HEX", n)
    plane = dual_graph(region)
    first, second = region.marked
    edge = (first, second) if plane.color(first) == "BLACK" else (second, first)
    return probability_table(plane)[edge]


def holey_ratio(n: int) -> HoleyRatioReport:
    """count(adjacent-pair holey hexagon) / macmahon(n,n,n) against the pair's edge probability."""
    spec = HexagonSpec(a=n, b=n, c=n)
    holey_count, _ = count_matchings(dual_graph(holey_hexagon("ADJACENT_PAIR", n)))
    total = macmahon(spec)
    ratio = Fraction(holey_count, total)
    up, down = central_pair(n)
    plane = dual_graph(hexagon(spec))
    probability = probability_table(plane)[(up, down)]
    excess = ratio - Fraction(1, 3)
    return HoleyRatioReport(
        n=n,
        holey_count=holey_count,
        total=total,
        ratio=ratio,
        probability=probability,
        excess=excess,
        excess_numerator=render_factored(factorize(abs(excess.numerator))) if excess else "0",
        excess_denominator=render_factored(factorize(excess.denominator)),
    )

