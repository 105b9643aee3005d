"""PlaneGraph: the dual graph handed to the counting engines."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Literal, Mapping

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from src.contracts.errors import EngineError
from src.grid.embedding import FaceWalk, Point, geometric_faces

Node = Hashable
Color = Literal["BLACK", "WHITE"]
BLACK: Color = "BLACK"
WHITE: Color = "WHITE"


class PlaneGraph(BaseModel):
    """Weighted graph with optional colors and plane embedding data.

    Nodes carry a ``color`` attribute (BLACK, WHITE or None); edges carry an
    exact ``weight``. ``faces`` lists the bounded faces as closed vertex walks,
    clockwise when ``oriented`` is set; ``outer`` has one walk per component.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph: nx.Graph
    faces: tuple[FaceWalk, ...] | None = Field(
        default=None, description="Bounded faces; None when no embedding is known."
    )
    outer: tuple[FaceWalk, ...] = Field(default=(), description="Outer face walk per component.")
    oriented: bool = Field(
        default=False, description="Whether face walks follow one rotational sense."
    )

    @property
    def planar(self) -> bool:
        """True when an embedding is attached."""
        return self.faces is not None

    @property
    def nodes(self) -> list[Node]:
        """Nodes in sorted order."""
        return sorted(self.graph.nodes)

    def color(self, node: Node) -> Color | None:
        """Color tag of a node."""
        return self.graph.nodes[node].get("color")

    @property
    def black(self) -> list[Node]:
        """Sorted black nodes."""
        return [node for node in self.nodes if self.color(node) == BLACK]

    @property
    def white(self) -> list[Node]:
        """Sorted white nodes."""
        return [node for node in self.nodes if self.color(node) == WHITE]

    @property
    def bipartite(self) -> bool:
        """True when every node is colored and every edge joins black to white."""
        if any(self.color(node) is None for node in self.graph.nodes):
            return False
        return all(self.color(u) != self.color(v) for u, v in self.graph.edges)

    @property
    def balanced(self) -> bool:
        """Equal numbers of black and white nodes."""
        return len(self.black) == len(self.white)

    def weight(self, u: Node, v: Node) -> Fraction:
        """Exact weight of an edge."""
        return self.graph.edges[u, v].get("weight", Fraction(1))

    @property
    def weighted(self) -> bool:
        """True when some edge weight differs from 1."""
        return any(data.get("weight", 1) != 1 for _, _, data in self.graph.edges(data=True))

    def euler_holds(self) -> bool:
        """V - E + F = 2 per component, counting each component's outer face."""
        if self.faces is None:
            return False
        components = nx.number_connected_components(self.graph)
        return (
            self.graph.number_of_nodes() - self.graph.number_of_edges() + len(self.faces)
            == components
        )

    def without(self, *removed: Node) -> PlaneGraph:
        """Subgraph with nodes removed; drawn graphs are re-embedded, declared faces dropped."""
        graph = self.graph.copy()
        graph.remove_nodes_from(removed)
        positions = nx.get_node_attributes(graph, "pos")
        if self.oriented and len(positions) == graph.number_of_nodes():
            return embedded_graph(graph, positions)
        return PlaneGraph(graph=graph)


def make_graph(
    nodes: Mapping[Node, Color | None],
    edges: Mapping[tuple[Node, Node], Fraction] | list[tuple[Node, Node]],
) -> nx.Graph:
    """Build a networkx graph; parallel edges merge by summing weights."""
    graph = nx.Graph()
    for node in sorted(nodes):
        graph.add_node(node, color=nodes[node])
    items = edges.items() if isinstance(edges, Mapping) else ((edge, Fraction(1)) for edge in edges)
    for (u, v), weight in items:
        if u == v:
            raise EngineError(f"self-loop at {u!r}")
        if graph.has_edge(u, v):
            graph.edges[u, v]["weight"] += Fraction(weight)
        else:
            graph.add_edge(u, v, weight=Fraction(weight))
    return graph


def embedded_graph(graph: nx.Graph, positions: Mapping[Node, Point]) -> PlaneGraph:
    """Attach the faces of a straight-line drawing to a graph."""
    nx.set_node_attributes(graph, dict(positions), "pos")
    bounded, outer = geometric_faces(graph, positions)
    return PlaneGraph(graph=graph, faces=tuple(bounded), outer=tuple(outer), oriented=True)
