"""Rotation systems and face walks of straight-line drawings."""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from typing import Hashable, Mapping, Sequence

import networkx as nx

from src.contracts.errors import EngineError, RegionValidationError
from src.utils.logging import log_event

Node = Hashable
Point = tuple[Fraction, Fraction]
FaceWalk = tuple[Node, ...]


def _half_plane(dx: Fraction, dy: Fraction) -> int:
    """0 for angles in [0, pi), 1 for [pi, 2 pi)."""
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _compare_directions(first: Point, second: Point) -> int:
    """Counterclockwise angular order of two nonzero direction vectors."""
    first_half = _half_plane(*first)
    second_half = _half_plane(*second)
    if first_half != second_half:
        return first_half - second_half
    cross = first[0] * second[1] - first[1] * second[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def rotation_system(graph: nx.Graph, positions: Mapping[Node, Point]) -> dict[Node, list[Node]]:
    """Neighbors of every node in clockwise order, in math orientation (y up)."""
    rotation: dict[Node, list[Node]] = {}
    for node in graph.nodes:
        origin = positions[node]

        def direction(other: Node) -> Point:
            target = positions[other]
            return (target[0] - origin[0], target[1] - origin[1])

        ccw = sorted(
            graph.neighbors(node),
            key=cmp_to_key(lambda left, right: _compare_directions(direction(left), direction(right))),
        )
        rotation[node] = list(reversed(ccw))
    return rotation


def signed_area(walk: Sequence[Node], positions: Mapping[Node, Point]) -> Fraction:
    """Shoelace area of a closed walk; positive for counterclockwise walks."""
    total = Fraction(0)
    for index, node in enumerate(walk):
        x0, y0 = positions[node]
        x1, y1 = positions[walk[(index + 1) % len(walk)]]
        total += x0 * y1 - x1 * y0
    return total / 2


def geometric_faces(
    graph: nx.Graph, positions: Mapping[Node, Point]
) -> tuple[list[FaceWalk], list[FaceWalk]]:
    """Bounded face walks (clockwise) and one outer walk per component.

    Raises EngineError when the drawing has crossings, detected by Euler's
    formula on the induced rotation system.
    """
    embedding = nx.PlanarEmbedding()
    embedding.add_nodes_from(graph.nodes)
    embedding.set_data(rotation_system(graph, positions))
    try:
        embedding.check_structure()
    except nx.NetworkXException as exc:
        raise EngineError(f"drawing is not a plane embedding: {exc}") from exc

    bounded: list[FaceWalk] = []
    outer: list[FaceWalk] = []
    visited: set[tuple[Node, Node]] = set()
    for component in sorted(nx.connected_components(graph), key=min):
        walks: list[FaceWalk] = []
        for node in sorted(component):
            for neighbor in embedding.neighbors_cw_order(node):
                if (node, neighbor) in visited:
                    continue
                walks.append(tuple(embedding.traverse_face(node, neighbor, visited)))
        if not walks:
            continue
        outer_index = max(range(len(walks)), key=lambda i: signed_area(walks[i], positions))
        outer.append(walks[outer_index])
        bounded.extend(walk for index, walk in enumerate(walks) if index != outer_index)
    log_event("faces_computed", bounded=len(bounded), components=len(outer))
    return bounded, outer


def declared_faces(
    graph: nx.Graph, edges: Sequence[tuple[Node, Node]], faces: Sequence[Sequence[int]]
) -> list[FaceWalk]:
    """Turn faces given as cyclic lists of 1-based edge indices into vertex walks."""
    walks: list[FaceWalk] = []
    for face_index, face in enumerate(faces):
        cycle = [edges[index - 1] for index in face]
        if len(cycle) < 2:
            raise RegionValidationError(f"face {face_index + 1} has fewer than two edges")
        first, second = cycle[0], cycle[1]
        shared = set(first) & set(second)
        if not shared:
            raise RegionValidationError(f"face {face_index + 1}: consecutive edges do not meet")
        # Start at the endpoint of the first edge not shared with the second.
        current = first[0] if first[1] in shared else first[1]
        walk: list[Node] = []
        for a, b in cycle:
            if current == a:
                walk.append(a)
                current = b
            elif current == b:
                walk.append(b)
                current = a
            else:
                raise RegionValidationError(f"face {face_index + 1} is not a closed walk")
        if current != walk[0]:
            raise RegionValidationError(f"face {face_index + 1} is not a closed walk")
        for a, b in zip(walk, walk[1:] + walk[:1]):
            if not graph.has_edge(a, b):
                raise RegionValidationError(f"face {face_index + 1} uses a missing edge")
        walks.append(tuple(walk))
    return walks
