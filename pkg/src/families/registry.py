"""Name-addressable family registry used by the CLI and the pipeline."""

from __future__ import annotations

from typing import Callable, Final

from pydantic import BaseModel, ConfigDict, Field

from config.constants import (
    FAMILY_AZTEC_CENTER_PAIR,
    FAMILY_AZTEC_DIAMOND,
    FAMILY_AZTEC_KNIGHT,
    FAMILY_AZTEC_RECT_ADJACENT,
    FAMILY_AZTEC_RECT_CENTER,
    FAMILY_AZTEC_WINDOW,
    FAMILY_CENTRAL_EDGE_HEX,
    FAMILY_CUBE,
    FAMILY_HEXAGON,
    FAMILY_HOLEY_ADJACENT,
    FAMILY_HOLEY_CENTRAL_TRIANGLE,
    FAMILY_HOLEY_OPPOSITE,
    FAMILY_HOLEY_THREE_SIDES,
    FAMILY_INTRUDED_SQUARE,
    FAMILY_PILLOW_0MOD4,
    FAMILY_PILLOW_2MOD4,
    FAMILY_QUASI_HEXAGON,
    FAMILY_RECTANGLE,
    FAMILY_TRIANGLE_GRAPH,
    MSG_UNKNOWN_FAMILY,
)
from src.contracts.errors import UnknownFamilyError
from src.contracts.models import AztecKind, AztecSpec, HexagonSpec, HoleyKind
from src.families.aztec import aztec, rectangle
from src.families.graphs import cube_graph, triangle_graph
from src.families.hexagons import hexagon, holey_hexagon
from src.families.quasi import quasi_hexagon
from src.grid.plane import PlaneGraph
from src.grid.regions import CellComplex, SquareRegion, TriRegion

Instance = TriRegion | SquareRegion | CellComplex | PlaneGraph
Builder = Callable[[dict[str, int]], Instance]


class FamilyEntry(BaseModel):
    """One generator with its parameter names and sweep key."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    description: str
    sweep_key: str = Field(default="n", description="Parameter varied by sweeps.")
    defaults: dict[str, int] = Field(default_factory=dict)
    builder: Builder


def _hexagon_spec(params: dict[str, int]) -> HexagonSpec:
    """a, b, c default to n for regular hexagons."""
    n = params.get("n", 1)
    return HexagonSpec(a=params.get("a", n), b=params.get("b", n), c=params.get("c", n))


def _holey(kind: HoleyKind) -> Builder:
    """Builder for one holey-hexagon kind."""
    return lambda params: holey_hexagon(kind, params["n"])


def _aztec(kind: AztecKind) -> Builder:
    """Builder for one square-lattice kind."""
    return lambda params: aztec(AztecSpec(kind=kind, **params))


FAMILIES: Final[dict[str, FamilyEntry]] = {
    entry.name: entry
    for entry in (
        FamilyEntry(
            name=FAMILY_HEXAGON,
            description="a,b,c semiregular hexagon (a=b=c=n when only n is given).",
            builder=lambda params: hexagon(_hexagon_spec(params)),
        ),
        FamilyEntry(
            name=FAMILY_HOLEY_CENTRAL_TRIANGLE,
            description="n,n+1,n,n+1,n,n+1 hexagon minus its central triangle.",
            builder=_holey("CENTRAL_TRIANGLE"),
        ),
        FamilyEntry(
            name=FAMILY_HOLEY_THREE_SIDES,
            description="2n,2n+3 hexagon minus a triangle from the middle of three sides.",
            builder=_holey("THREE_SIDES"),
        ),
        FamilyEntry(
            name=FAMILY_HOLEY_OPPOSITE,
            description="n,n,n hexagon minus the opposite central UP/DOWN pair.",
            builder=_holey("OPPOSITE_PAIR"),
        ),
        FamilyEntry(
            name=FAMILY_HOLEY_ADJACENT,
            description="n,n,n hexagon minus the adjacent central UP/DOWN pair.",
            builder=_holey("ADJACENT_PAIR"),
        ),
        FamilyEntry(
            name=FAMILY_CENTRAL_EDGE_HEX,
            description="2n-1,2n,2n-1 hexagon with its central cell pair marked.",
            builder=_holey("CENTRAL_EDGE_HEX"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_DIAMOND,
            description="Aztec diamond of order n.",
            builder=_aztec("DIAMOND"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_CENTER_PAIR,
            description="Aztec diamond minus the central pair.",
            builder=_aztec("CENTER_PAIR_REMOVED"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_KNIGHT,
            description="Aztec diamond minus a central pair a knight's move apart.",
            defaults={"n": 2},
            builder=_aztec("KNIGHT_PAIR_REMOVED"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_RECT_CENTER,
            description="2n x (2n+1) Aztec rectangle minus its central square.",
            builder=_aztec("RECT_CENTER_HOLE"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_RECT_ADJACENT,
            description="(2n-1) x 2n Aztec rectangle minus a square next to the center.",
            builder=_aztec("RECT_ADJACENT_HOLE"),
        ),
        FamilyEntry(
            name=FAMILY_INTRUDED_SQUARE,
            description="2n x 2n square minus a corner zig-zag of m dominoes (m = n/2 by default).",
            defaults={"n": 2},
            builder=_aztec("INTRUDED_SQUARE"),
        ),
        FamilyEntry(
            name=FAMILY_PILLOW_0MOD4,
            description="Even pillow with row widths 0 mod 4.",
            builder=_aztec("PILLOW_0MOD4"),
        ),
        FamilyEntry(
            name=FAMILY_PILLOW_2MOD4,
            description="Even pillow with row widths 2 mod 4.",
            builder=_aztec("PILLOW_2MOD4"),
        ),
        FamilyEntry(
            name=FAMILY_AZTEC_WINDOW,
            description="Order x+w Aztec diamond minus the centered order-x diamond.",
            sweep_key="x",
            defaults={"x": 0, "w": 2},
            builder=_aztec("WINDOW"),
        ),
        FamilyEntry(
            name=FAMILY_QUASI_HEXAGON,
            description="a,b,c quasi-hexagon in the sliced square grid.",
            builder=lambda params: quasi_hexagon(_hexagon_spec(params)),
        ),
        FamilyEntry(
            name=FAMILY_TRIANGLE_GRAPH,
            description="Triangle graph of order n.",
            builder=lambda params: triangle_graph(params["n"]),
        ),
        FamilyEntry(
            name=FAMILY_CUBE,
            description="n-cube graph.",
            builder=lambda params: cube_graph(params["n"]),
        ),
        FamilyEntry(
            name=FAMILY_RECTANGLE,
            description="m x n rectangle of unit squares.",
            defaults={"m": 2, "n": 2},
            builder=lambda params: rectangle(params["m"], params["n"]),
        ),
    )
}


def get_family(name: str) -> FamilyEntry:
    """Look up a family by name."""
    try:
        return FAMILIES[name]
    except KeyError as exc:
        raise UnknownFamilyError(
            MSG_UNKNOWN_FAMILY.format(name=name, known=", ".join(sorted(FAMILIES)))
        ) from exc


def build_family(name: str, params: dict[str, int] | None = None) -> Instance:
    """Build one family member; unspecified parameters take the family defaults (n = 1)."""
    entry = get_family(name)
    merged = {"n": 1, **entry.defaults, **(params or {})}
    if entry.name == FAMILY_AZTEC_WINDOW:
        merged.pop("n", None)
    return entry.builder(merged)
