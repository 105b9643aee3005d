"""Kasteleyn sign assignments and Pfaffian orientations of plane graphs.

Both constructions follow the same plan: every edge of a breadth-first
spanning forest keeps its default, and the remaining edges, which form a
spanning tree of the dual rooted at the outer faces, are fixed one face at a
time from the leaves of that dual tree inwards.
"""

from __future__ import annotations

from collections import defaultdict, deque
from fractions import Fraction
from typing import Hashable, NamedTuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.matrices import DomainMatrix

from config.constants import MSG_FACE_CONDITION, MSG_NO_EMBEDDING, MSG_NOT_BIPARTITE
from src.contracts.errors import EngineError
from src.grid.embedding import FaceWalk
from src.grid.plane import PlaneGraph
from src.linalg.matrices import int_matrix, rational_matrix
from src.utils.logging import log_event

Node = Hashable
EdgeKey = tuple[Node, Node]


class KasteleynMatrix(BaseModel):
    """Signed biadjacency matrix, black rows by white columns."""

    model_config = ConfigDict(frozen=True)

    black: tuple[Node, ...]
    white: tuple[Node, ...]
    entries: tuple[tuple[Fraction, ...], ...] = Field(
        description="Entry (i, j) is 0 or +/- the weight of edge black[i]-white[j]."
    )

    @property
    def square(self) -> bool:
        """Balanced bipartition."""
        return len(self.black) == len(self.white)

    @property
    def integral(self) -> bool:
        """True when every entry is an integer."""
        return all(value.denominator == 1 for row in self.entries for value in row)

    def rows(self) -> list[list[Fraction]]:
        """Entries as nested lists."""
        return [list(row) for row in self.entries]

    def to_domain(self) -> DomainMatrix:
        """Integer domain matrix when integral, rational otherwise."""
        if self.integral:
            return int_matrix([[int(value) for value in row] for row in self.entries])
        return rational_matrix(self.entries)

    def entry(self, black: Node, white: Node) -> Fraction:
        """Signed entry for an edge, 0 when absent."""
        return self.entries[self.black.index(black)][self.white.index(white)]

    def provenance(self) -> dict[tuple[int, int], EdgeKey]:
        """Map nonzero entries back to (black, white) edges."""
        return {
            (i, j): (black, white)
            for i, black in enumerate(self.black)
            for j, white in enumerate(self.white)
            if self.entries[i][j]
        }


class OrientedSkewMatrix(BaseModel):
    """Skew-symmetric weighted adjacency matrix of a Pfaffian orientation."""

    model_config = ConfigDict(frozen=True)

    nodes: tuple[Node, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def to_domain(self) -> DomainMatrix:
        """Integer domain matrix when integral, rational otherwise."""
        if all(value.denominator == 1 for row in self.entries for value in row):
            return int_matrix([[int(value) for value in row] for row in self.entries])
        return rational_matrix(self.entries)


class DualTree(NamedTuple):
    """Spanning forest edges and the dual tree in breadth-first order."""

    tree: frozenset[EdgeKey]
    order: tuple[tuple[int, EdgeKey], ...]


def edge_key(u: Node, v: Node) -> EdgeKey:
    """Undirected edge key with sorted endpoints."""
    return (u, v) if u <= v else (v, u)


def steps(walk: FaceWalk) -> list[tuple[Node, Node]]:
    """Directed steps of a closed walk, repeats included."""
    return [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]


def _require_faces(plane: PlaneGraph) -> tuple[FaceWalk, ...]:
    """Bounded faces or an EngineError when no embedding is attached."""
    if plane.faces is None:
        raise EngineError(MSG_NO_EMBEDDING)
    return plane.faces


def consistent_faces(plane: PlaneGraph) -> tuple[FaceWalk, ...]:
    """Face walks turned so that every shared edge is traversed both ways.

    Geometric embeddings are already clockwise. Declared faces come in any
    sense, so they are flipped face by face across shared edges; a mirror
    image of a plane embedding is again one, so either global sense works.
    """
    faces = list(_require_faces(plane))
    if plane.oriented:
        return tuple(faces)
    holders: dict[EdgeKey, list[int]] = defaultdict(list)
    for index, walk in enumerate(faces):
        for u, v in steps(walk):
            holders[edge_key(u, v)].append(index)
    fixed: set[int] = set()
    for start in range(len(faces)):
        if start in fixed:
            continue
        fixed.add(start)
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for u, v in steps(faces[current]):
                for other in holders[edge_key(u, v)]:
                    if other == current:
                        continue
                    same_way = (u, v) in steps(faces[other])
                    if other in fixed:
                        if same_way:
                            raise EngineError("declared faces cannot be oriented consistently")
                        continue
                    if same_way:
                        faces[other] = tuple(reversed(faces[other]))
                    fixed.add(other)
                    queue.append(other)
    return tuple(faces)


def dual_spanning_tree(plane: PlaneGraph, faces: tuple[FaceWalk, ...] | None = None) -> DualTree:
    """BFS spanning forest from each component's least node and the complementary dual tree.

    Faces are visited breadth-first from the outer faces, neighbors ordered by
    the least node on their boundary, so the result is fixed by the embedding.
    """
    graph = plane.graph
    faces = _require_faces(plane) if faces is None else faces
    components = sorted((sorted(component) for component in nx.connected_components(graph)), key=min)
    tree: set[EdgeKey] = set()
    component_of: dict[Node, int] = {}
    for number, component in enumerate(components):
        component_of.update(dict.fromkeys(component, number))
        for u, v in nx.bfs_edges(graph, component[0], sort_neighbors=sorted):
            tree.add(edge_key(u, v))

    sides: dict[EdgeKey, list[int]] = defaultdict(list)
    for index, walk in enumerate(faces):
        for u, v in steps(walk):
            sides[edge_key(u, v)].append(index)
    outer_base = len(faces)
    adjacency: dict[int, list[tuple[int, EdgeKey]]] = defaultdict(list)
    for u, v in graph.edges:
        key = edge_key(u, v)
        if key in tree:
            continue
        owners = list(sides.get(key, ()))
        if len(owners) == 1:
            owners.append(outer_base + component_of[u])
        if len(owners) != 2 or owners[0] == owners[1]:
            raise EngineError(f"edge {key!r} does not separate two faces")
        adjacency[owners[0]].append((owners[1], key))
        adjacency[owners[1]].append((owners[0], key))

    rank = {
        face: position
        for position, face in enumerate(sorted(range(len(faces)), key=lambda f: (min(faces[f]), f)))
    }
    order: list[tuple[int, EdgeKey]] = []
    seen: set[int] = set()
    for number in range(len(components)):
        root = outer_base + number
        seen.add(root)
        queue = deque([root])
        while queue:
            current = queue.popleft()
            for neighbor, key in sorted(adjacency[current], key=lambda item: rank.get(item[0], item[0])):
                if neighbor in seen:
                    continue
                seen.add(neighbor)
                order.append((neighbor, key))
                queue.append(neighbor)
    if len(order) != len(faces):
        raise EngineError("faces do not form a plane embedding of the graph")
    return DualTree(tree=frozenset(tree), order=tuple(order))


def face_violations(faces: tuple[FaceWalk, ...], signs: dict[EdgeKey, int]) -> list[int]:
    """Faces whose negative-step count is not congruent to length/2 + 1 mod 2."""
    violations = []
    for index, walk in enumerate(faces):
        negatives = sum(1 for u, v in steps(walk) if signs[edge_key(u, v)] < 0)
        if negatives % 2 != (len(walk) // 2 + 1) % 2:
            violations.append(index)
    return violations


def kasteleyn_signs(plane: PlaneGraph) -> dict[EdgeKey, int]:
    """Edge signs satisfying the face condition on every bounded face."""
    if not plane.bipartite:
        raise EngineError(MSG_NOT_BIPARTITE)
    faces = _require_faces(plane)
    dual = dual_spanning_tree(plane, faces)
    signs = {edge_key(u, v): 1 for u, v in plane.graph.edges}
    for face, parent in reversed(dual.order):
        negatives = sum(
            1
            for u, v in steps(faces[face])
            if edge_key(u, v) != parent and signs[edge_key(u, v)] < 0
        )
        needed = (len(faces[face]) // 2 + 1) % 2
        signs[parent] = 1 if negatives % 2 == needed else -1
    return signs


def matrix_from_signs(plane: PlaneGraph, signs: dict[EdgeKey, int]) -> KasteleynMatrix:
    """Assemble K from edge signs and weights, checking the face condition first."""
    violations = face_violations(_require_faces(plane), signs)
    if violations:
        raise EngineError(MSG_FACE_CONDITION.format(face=violations[0] + 1))
    black, white = plane.black, plane.white
    column = {node: j for j, node in enumerate(white)}
    rows = [[Fraction(0)] * len(white) for _ in black]
    for i, node in enumerate(black):
        for neighbor in plane.graph.neighbors(node):
            rows[i][column[neighbor]] = signs[edge_key(node, neighbor)] * plane.weight(node, neighbor)
    return KasteleynMatrix(
        black=tuple(black),
        white=tuple(white),
        entries=tuple(tuple(row) for row in rows),
    )


def sign_assignment(plane: PlaneGraph) -> KasteleynMatrix:
    """Kasteleyn matrix of a planar bipartite graph with its embedding."""
    signs = kasteleyn_signs(plane)
    matrix = matrix_from_signs(plane, signs)
    log_event(
        "signs_assigned",
        rows=len(matrix.black),
        cols=len(matrix.white),
        negative=sum(1 for sign in signs.values() if sign < 0),
    )
    return matrix


def vertical_domino_signs(plane: PlaneGraph) -> dict[EdgeKey, int]:
    """Square-lattice rule: the vertical edge (r, c)-(r+1, c) is negative iff r + c is even.

    Negated vertical dominoes alternate along rows and along columns.
    """
    signs = {}
    for u, v in plane.graph.edges:
        (r0, c0), (r1, c1) = edge_key(u, v)
        vertical = c0 == c1 and abs(r0 - r1) == 1
        signs[edge_key(u, v)] = -1 if vertical and (min(r0, r1) + c0) % 2 == 0 else 1
    return signs


def vertical_domino_matrix(plane: PlaneGraph) -> KasteleynMatrix:
    """Kasteleyn matrix of a square-lattice dual with every other vertical domino flipped."""
    if not plane.bipartite:
        raise EngineError(MSG_NOT_BIPARTITE)
    return matrix_from_signs(plane, vertical_domino_signs(plane))


def clockwise_violations(
    faces: tuple[FaceWalk, ...], direction: dict[EdgeKey, tuple[Node, Node]]
) -> list[int]:
    """Faces with an even number of steps agreeing with the orientation."""
    return [
        index
        for index, walk in enumerate(faces)
        if sum(1 for step in steps(walk) if direction[edge_key(*step)] == step) % 2 == 0
    ]


def pfaffian_orientation(plane: PlaneGraph) -> OrientedSkewMatrix:
    """Orientation with an odd number of agreeing steps around every bounded face."""
    faces = consistent_faces(plane)
    dual = dual_spanning_tree(plane, faces)
    direction = {edge_key(u, v): edge_key(u, v) for u, v in plane.graph.edges}
    for face, parent in reversed(dual.order):
        agreeing = 0
        parent_step = parent
        for step in steps(faces[face]):
            key = edge_key(*step)
            if key == parent:
                parent_step = step
            elif direction[key] == step:
                agreeing += 1
        direction[parent] = parent_step if agreeing % 2 == 0 else (parent_step[1], parent_step[0])
    violations = clockwise_violations(faces, direction)
    if violations:
        raise EngineError(MSG_FACE_CONDITION.format(face=violations[0] + 1))

    nodes = plane.nodes
    position = {node: i for i, node in enumerate(nodes)}
    rows = [[Fraction(0)] * len(nodes) for _ in nodes]
    for tail, head in direction.values():
        weight = plane.weight(tail, head)
        rows[position[tail]][position[head]] = weight
        rows[position[head]][position[tail]] = -weight
    log_event("pfaffian_oriented", vertices=len(nodes), faces=len(faces))
    return OrientedSkewMatrix(nodes=tuple(nodes), entries=tuple(tuple(row) for row in rows))


def regauge(
    matrix: KasteleynMatrix, row_flips: set[int], column_flips: set[int]
) -> KasteleynMatrix:
    """Negate chosen rows and columns, i.e. flip signs along vertex cuts."""
    entries = tuple(
        tuple(
            -value if (i in row_flips) != (j in column_flips) else value
            for j, value in enumerate(row)
        )
        for i, row in enumerate(matrix.entries)
    )
    return KasteleynMatrix(black=matrix.black, white=matrix.white, entries=entries)
