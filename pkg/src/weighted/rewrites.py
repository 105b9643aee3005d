"""Local substitutions that rescale the weighted matching sum by a known factor."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Hashable, Literal, Mapping

import networkx as nx

from config.constants import KENYON_MOVE_FACTOR, KENYON_MOVE_WEIGHTS, MSG_PATTERN_MISMATCH
from src.contracts.errors import PatternMismatchError
from src.contracts.models import RewriteCheck, UrbanRenewalWeights
from src.grid.plane import PlaneGraph
from src.kasteleyn.engines import brute_force_count
from src.utils.logging import log_event

Node = Hashable
Site = Mapping[str, Node]
Orientation = Literal["left", "right"]

CITY_ROLES = ("p", "q", "r", "s", "t", "u", "v", "w")
# Cycle t-u-v-w carries a, b, c, d; each corner has one pendant.
CITY_EDGES = (("t", "u"), ("u", "v"), ("v", "w"), ("w", "t"))
CITY_PENDANTS = (("p", "t"), ("q", "u"), ("r", "v"), ("s", "w"))
LADDER_ROLES = ("p", "q", "r", "s", "t", "u")
LADDER_EDGES = (("p", "q"), ("p", "r"), ("q", "s"), ("r", "s"), ("r", "t"), ("s", "u"), ("t", "u"))


def _mismatch(detail: str) -> PatternMismatchError:
    return PatternMismatchError(MSG_PATTERN_MISMATCH.format(detail=detail))


def _require_roles(site: Site, roles: tuple[str, ...]) -> None:
    missing = [role for role in roles if role not in site]
    if missing:
        raise _mismatch(f"missing roles {missing}")
    if len({site[role] for role in roles}) != len(roles):
        raise _mismatch("roles must name distinct vertices")


def _require_edge(graph: nx.Graph, site: Site, a: str, b: str, unit: bool = False) -> Fraction:
    u, v = site[a], site[b]
    if not graph.has_edge(u, v):
        raise _mismatch(f"edge {a}-{b} is absent")
    weight = graph.edges[u, v].get("weight", Fraction(1))
    if unit and weight != 1:
        raise _mismatch(f"edge {a}-{b} must have weight 1, has {weight}")
    return weight


def _require_neighbors(graph: nx.Graph, site: Site, role: str, allowed: tuple[str, ...]) -> None:
    extra = set(graph.neighbors(site[role])) - {site[name] for name in allowed}
    if extra:
        raise _mismatch(f"vertex {role} is attached outside the site")


def _add_weight(graph: nx.Graph, u: Node, v: Node, weight: Fraction) -> None:
    """Parallel edges merge by summing weights."""
    if graph.has_edge(u, v):
        graph.edges[u, v]["weight"] += weight
    else:
        graph.add_edge(u, v, weight=weight)


def city_weights(plane: PlaneGraph, site: Site) -> UrbanRenewalWeights:
    """Read a, b, c, d off a matched city."""
    _require_roles(site, CITY_ROLES)
    graph = plane.graph
    a, b, c, d = (_require_edge(graph, site, x, y) for x, y in CITY_EDGES)
    for pendant, corner in CITY_PENDANTS:
        _require_edge(graph, site, pendant, corner, unit=True)
    neighbors = {"t": ("u", "w", "p"), "u": ("t", "v", "q"), "v": ("u", "w", "r"), "w": ("v", "t", "s")}
    for corner, allowed in neighbors.items():
        _require_neighbors(graph, site, corner, allowed)
    return UrbanRenewalWeights(a=a, b=b, c=c, d=d)


def urban_renewal(plane: PlaneGraph, site: Site) -> tuple[PlaneGraph, Fraction]:
    """Replace the city t,u,v,w by the 4-cycle p-q-r-s with weights C, D, A, B.

    Returns the rewritten graph and ac + bd, so that the weighted sum of the
    input equals the factor times the weighted sum of the output.
    """
    weights = city_weights(plane, site)
    big_a, big_b, big_c, big_d = weights.rescaled
    graph = plane.graph.copy()
    graph.remove_nodes_from(site[role] for role in ("t", "u", "v", "w"))
    for (x, y), weight in (
        (("p", "q"), big_c),
        (("q", "r"), big_d),
        (("r", "s"), big_a),
        (("s", "p"), big_b),
    ):
        _add_weight(graph, site[x], site[y], weight)
    log_event("urban_renewal_applied", factor=weights.factor)
    return PlaneGraph(graph=graph), weights.factor


def kenyon_move(plane: PlaneGraph, site: Site) -> tuple[PlaneGraph, Fraction]:
    """Reweight the unit ladder p,q / r,s / t,u and cut t-u; r and s must be private."""
    _require_roles(site, LADDER_ROLES)
    graph = plane.graph
    for x, y in LADDER_EDGES:
        _require_edge(graph, site, x, y, unit=True)
    _require_neighbors(graph, site, "r", ("p", "s", "t"))
    _require_neighbors(graph, site, "s", ("q", "r", "u"))
    rewritten = graph.copy()
    rewritten.remove_edge(site["t"], site["u"])
    for (x, y), weight in KENYON_MOVE_WEIGHTS.items():
        rewritten.edges[site[x], site[y]]["weight"] = weight
    log_event("kenyon_move_applied", factor=KENYON_MOVE_FACTOR)
    return PlaneGraph(graph=rewritten), KENYON_MOVE_FACTOR


def mirrored(site: Site) -> dict[str, Node]:
    """Swap the two ladder columns."""
    swap = {"p": "q", "q": "p", "r": "s", "s": "r", "t": "u", "u": "t"}
    return {role: site[swap[role]] for role in LADDER_ROLES}


def ladder_host(orientation: Orientation = "left") -> tuple[PlaneGraph, dict[str, Node]]:
    """3 x 4 grid graph holding a ladder in its left or right two columns.

    The middle-row edge leaving the ladder is removed so r and s stay private.
    """
    graph = nx.grid_2d_graph(3, 4)
    nx.set_edge_attributes(graph, Fraction(1), "weight")
    if orientation == "left":
        site = {"p": (0, 0), "q": (0, 1), "r": (1, 0), "s": (1, 1), "t": (2, 0), "u": (2, 1)}
        graph.remove_edge((1, 1), (1, 2))
    else:
        site = {"p": (0, 3), "q": (0, 2), "r": (1, 3), "s": (1, 2), "t": (2, 3), "u": (2, 2)}
        graph.remove_edge((1, 2), (1, 1))
    return PlaneGraph(graph=graph), site


def ladder_closed() -> tuple[PlaneGraph, dict[str, Node]]:
    """The bare ladder; its own edges complete every matching."""
    graph = nx.Graph()
    for x, y in LADDER_EDGES:
        graph.add_edge(x, y, weight=Fraction(1))
    return PlaneGraph(graph=graph), {role: role for role in LADDER_ROLES}


def city_host(seed: int, extra: int = 6, density: float = 0.5) -> tuple[PlaneGraph, dict[str, Node]]:
    """Random weighted host around a city with random positive rational weights."""
    rng = random.Random(seed)

    def weight() -> Fraction:
        return Fraction(rng.randint(1, 9), rng.randint(1, 5))

    graph = nx.Graph()
    site = {role: role for role in CITY_ROLES}
    for x, y in CITY_EDGES:
        graph.add_edge(x, y, weight=weight())
    for x, y in CITY_PENDANTS:
        graph.add_edge(x, y, weight=Fraction(1))
    outside = ["p", "q", "r", "s"] + [f"h{index}" for index in range(extra)]
    for index, u in enumerate(outside):
        for v in outside[index + 1 :]:
            if rng.random() < density:
                graph.add_edge(u, v, weight=weight())
    graph.add_nodes_from(outside)
    return PlaneGraph(graph=graph), site


def check_rewrite(move: str, plane: PlaneGraph, site: Site, host: str) -> RewriteCheck:
    """Weighted brute force before and after one move."""
    rewrite = urban_renewal if move == "urban-renewal" else kenyon_move
    rewritten, factor = rewrite(plane, site)
    check = RewriteCheck(
        move=move,
        host=host,
        factor=factor,
        before=Fraction(brute_force_count(plane, weighted=True)),
        after=Fraction(brute_force_count(rewritten, weighted=True)),
    )
    log_event("rewrite_checked", move=move, host=host, holds=check.holds)
    return check
