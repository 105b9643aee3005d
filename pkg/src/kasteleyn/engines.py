"""Counting engines and automatic engine selection."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, TypeVar

from config.constants import (
    ENGINE_BRUTE,
    ENGINE_DET,
    ENGINE_PERMANENT,
    ENGINE_PFAFFIAN,
    MSG_NOT_BIPARTITE,
    MSG_SIZE_LIMIT,
    MSG_SQRT_INEXACT,
)
from config.settings import settings
from src.contracts.errors import EngineError, SizeLimitError
from src.contracts.policies import require_engine, select_engine
from src.grid.plane import PlaneGraph
from src.kasteleyn.orientation import KasteleynMatrix, pfaffian_orientation, sign_assignment
from src.linalg.matrices import det_bareiss, det_rational, integer_sqrt
from src.utils.logging import log_event

Count = int | Fraction
Node = Hashable
Value = TypeVar("Value")


def exact(value: Fraction) -> Count:
    """Plain int when the value is integral."""
    return value.numerator if value.denominator == 1 else value


def count_det(matrix: KasteleynMatrix) -> Count:
    """|det K|; unbalanced colorings have no perfect matchings."""
    if not matrix.square:
        return 0
    if matrix.integral:
        return abs(det_bareiss(matrix.to_domain()))
    return exact(abs(det_rational(matrix.rows())))


def _exact_root(value: Fraction) -> Fraction:
    """Square root of a nonnegative rational that must be a perfect square."""
    numerator, numerator_exact = integer_sqrt(value.numerator)
    denominator, denominator_exact = integer_sqrt(value.denominator)
    if not (numerator_exact and denominator_exact):
        raise EngineError(MSG_SQRT_INEXACT)
    return Fraction(numerator, denominator)


def pfaffian_count(plane: PlaneGraph) -> Count:
    """sqrt(det A) for the skew matrix A of a Pfaffian orientation."""
    if plane.graph.number_of_nodes() % 2:
        return 0
    skew = pfaffian_orientation(plane)
    if all(value.denominator == 1 for row in skew.entries for value in row):
        determinant = Fraction(det_bareiss(skew.to_domain()))
    else:
        determinant = det_rational(skew.entries)
    if determinant < 0:
        raise EngineError(MSG_SQRT_INEXACT)
    return exact(_exact_root(determinant))


def _ryser(rows: list[list[Value]], zero: Value) -> Value:
    """Ryser inclusion-exclusion with Gray-code column updates."""
    size = len(rows)
    sums = [zero] * size
    total = zero
    members = 0
    previous_gray = 0
    for step in range(1, 2**size):
        gray = step ^ (step >> 1)
        changed = (gray ^ previous_gray).bit_length() - 1
        previous_gray = gray
        if gray >> changed & 1:
            members += 1
            sums = [total_i + row[changed] for total_i, row in zip(sums, rows)]
        else:
            members -= 1
            sums = [total_i - row[changed] for total_i, row in zip(sums, rows)]
        product = sums[0]
        for value in sums[1:]:
            if not product:
                break
            product = product * value
        total = total + product if members % 2 == size % 2 else total - product
    return total


def permanent_ryser(plane: PlaneGraph) -> Count:
    """Permanent of the weighted biadjacency matrix (black rows, white columns)."""
    if not plane.bipartite:
        raise EngineError(MSG_NOT_BIPARTITE)
    black, white = plane.black, plane.white
    if len(black) != len(white):
        return 0
    if len(black) > settings.PERMANENT_MAX_SIDE:
        raise SizeLimitError(
            MSG_SIZE_LIMIT.format(
                what="permanent side", value=len(black), limit=settings.PERMANENT_MAX_SIDE
            )
        )
    if not black:
        return 1
    rows = [
        [plane.weight(b, w) if plane.graph.has_edge(b, w) else Fraction(0) for w in white]
        for b in black
    ]
    if all(value.denominator == 1 for row in rows for value in row):
        return _ryser([[int(value) for value in row] for row in rows], 0)
    return exact(_ryser(rows, Fraction(0)))


def matching_sum(
    plane: PlaneGraph,
    weight: Callable[[Node, Node], Value],
    one: Value,
    zero: Value,
) -> Value:
    """Sum over perfect matchings of the product of edge weights.

    Branches on the remaining vertex of lowest degree and memoizes on the set
    of remaining vertices, so it works for any commutative ring of weights.
    """
    nodes = plane.nodes
    index = {node: i for i, node in enumerate(nodes)}
    adjacency = [0] * len(nodes)
    for u, v in plane.graph.edges:
        adjacency[index[u]] |= 1 << index[v]
        adjacency[index[v]] |= 1 << index[u]
    cache: dict[int, Value] = {0: one}

    def solve(remaining: int) -> Value:
        if remaining in cache:
            return cache[remaining]
        best, best_degree = -1, len(nodes) + 1
        scan = remaining
        while scan:
            low = scan & -scan
            vertex = low.bit_length() - 1
            degree = bin(adjacency[vertex] & remaining).count("1")
            if degree < best_degree:
                best, best_degree = vertex, degree
                if degree <= 1:
                    break
            scan ^= low
        total = zero
        if best_degree:
            rest = remaining & ~(1 << best)
            options = adjacency[best] & rest
            while options:
                low = options & -options
                partner = low.bit_length() - 1
                sub = solve(rest & ~low)
                if sub != zero:
                    total = total + weight(nodes[best], nodes[partner]) * sub
                options ^= low
        cache[remaining] = total
        return total

    return solve((1 << len(nodes)) - 1)


def brute_force_count(plane: PlaneGraph, weighted: bool = False) -> Count:
    """Exhaustive oracle: matching count, or the exact weighted sum when weighted."""
    limit = settings.BRUTE_FORCE_MAX_WEIGHTED_VERTICES if weighted else settings.BRUTE_FORCE_MAX_VERTICES
    size = plane.graph.number_of_nodes()
    if size > limit:
        raise SizeLimitError(MSG_SIZE_LIMIT.format(what="brute-force vertices", value=size, limit=limit))
    if size % 2:
        return 0
    if weighted:
        return exact(matching_sum(plane, plane.weight, Fraction(1), Fraction(0)))
    return matching_sum(plane, lambda u, v: 1, 1, 0)


def count_matchings(plane: PlaneGraph, method: str | None = None) -> tuple[Count, str]:
    """Count with the forced engine or the auto-selected one; weighted graphs give weighted sums."""
    engine = method or select_engine(planar=plane.planar, bipartite=plane.bipartite)
    require_engine(engine, planar=plane.planar, bipartite=plane.bipartite)
    log_event("engine_selected", engine=engine, forced=method is not None)
    if engine == ENGINE_DET:
        count = count_det(sign_assignment(plane)) if plane.balanced else 0
    elif engine == ENGINE_PFAFFIAN:
        count = pfaffian_count(plane)
    elif engine == ENGINE_PERMANENT:
        count = permanent_ryser(plane)
    elif engine == ENGINE_BRUTE:
        count = brute_force_count(plane, weighted=plane.weighted)
    else:
        raise EngineError(f"unknown engine {engine!r}")
    log_event("count_completed", engine=engine, count=count)
    return count, engine
