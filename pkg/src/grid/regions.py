"""Region types and their text encodings (.vax, .xreg, .cells)."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.constants import (
    MSG_UNKNOWN_CHARACTER,
    SQUARE_CHAR,
    TRI_DOWN_CHAR,
    TRI_UP_CHAR,
)
from src.contracts.errors import RegionParseError, RegionValidationError

Orientation = Literal["UP", "DOWN"]
CellColor = Literal["BLACK", "WHITE"]
TriCell = tuple[int, int, Orientation]
SquareCell = tuple[int, int]

_RATIONAL = re.compile(r"^(\d+)(?:/(\d+))?$")


class TriRegion(BaseModel):
    """Unit triangles on the triangular lattice at absolute (row, column) positions."""

    model_config = ConfigDict(frozen=True)

    cells: frozenset[TriCell]
    marked: tuple[tuple[int, int], ...] = Field(
        default=(), description="Distinguished cells, e.g. the central UP/DOWN pair."
    )

    @model_validator(mode="after")
    def validate_positions(self) -> TriRegion:
        """Every position holds at most one triangle."""
        positions = {(row, col) for row, col, _ in self.cells}
        if len(positions) != len(self.cells):
            raise ValueError("two triangles share a position")
        return self

    def orientation_map(self) -> dict[tuple[int, int], Orientation]:
        """Position to orientation lookup."""
        return {(row, col): orientation for row, col, orientation in self.cells}

    @property
    def up_count(self) -> int:
        """Number of upward triangles."""
        return sum(1 for *_, orientation in self.cells if orientation == "UP")

    @property
    def down_count(self) -> int:
        """Number of downward triangles."""
        return len(self.cells) - self.up_count

    def remove(self, *positions: tuple[int, int]) -> TriRegion:
        """Region with the given positions removed; missing positions are an error."""
        lookup = self.orientation_map()
        missing = [position for position in positions if position not in lookup]
        if missing:
            raise RegionValidationError(f"cannot remove absent cells {missing}")
        drop = set(positions)
        return TriRegion(
            cells=frozenset(cell for cell in self.cells if cell[:2] not in drop),
            marked=tuple(position for position in self.marked if position not in drop),
        )


class SquareRegion(BaseModel):
    """Unit squares at absolute (row, column) positions, checkerboard colored."""

    model_config = ConfigDict(frozen=True)

    cells: frozenset[SquareCell]

    @staticmethod
    def color(cell: SquareCell) -> CellColor:
        """(row + col) even is black."""
        return "BLACK" if (cell[0] + cell[1]) % 2 == 0 else "WHITE"

    @property
    def black_count(self) -> int:
        """Number of black squares."""
        return sum(1 for cell in self.cells if self.color(cell) == "BLACK")

    @property
    def white_count(self) -> int:
        """Number of white squares."""
        return len(self.cells) - self.black_count

    def remove(self, *positions: SquareCell) -> SquareRegion:
        """Region with the given squares removed; missing squares are an error."""
        missing = [position for position in positions if position not in self.cells]
        if missing:
            raise RegionValidationError(f"cannot remove absent cells {missing}")
        return SquareRegion(cells=self.cells - set(positions))


class ComplexCell(BaseModel):
    """One cell of a generic dissection."""

    model_config = ConfigDict(frozen=True)

    id: str
    color: CellColor | None = None


class ComplexEdge(BaseModel):
    """Adjacency between two cells with an exact positive weight."""

    model_config = ConfigDict(frozen=True)

    a: str
    b: str
    weight: Fraction = Fraction(1)


class CellComplex(BaseModel):
    """Generic cells, weighted adjacencies and optional faces (1-based edge indices)."""

    model_config = ConfigDict(frozen=True)

    cells: tuple[ComplexCell, ...]
    edges: tuple[ComplexEdge, ...] = ()
    faces: tuple[tuple[int, ...], ...] | None = None

    @model_validator(mode="after")
    def validate_complex(self) -> CellComplex:
        """Endpoints exist, declared colors alternate, weights positive, faces in range."""
        colors = {}
        for cell in self.cells:
            if cell.id in colors:
                raise ValueError(f"duplicate cell id {cell.id!r}")
            colors[cell.id] = cell.color
        for edge in self.edges:
            for endpoint in (edge.a, edge.b):
                if endpoint not in colors:
                    raise ValueError(f"edge endpoint {endpoint!r} is not a declared cell")
            if colors[edge.a] is not None and colors[edge.a] == colors[edge.b]:
                raise ValueError(f"edge {edge.a}-{edge.b} joins two {colors[edge.a]} cells")
            if edge.weight <= 0:
                raise ValueError(f"edge {edge.a}-{edge.b} has non-positive weight")
        for face in self.faces or ():
            for index in face:
                if not 1 <= index <= len(self.edges):
                    raise ValueError(f"face refers to unknown edge {index}")
        return self


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with their source index, trailing whitespace removed."""
    return [
        (index, line.rstrip())
        for index, line in enumerate(text.splitlines())
        if line.strip()
    ]


def parse_tri_region(text: str) -> TriRegion:
    """Parse a grid of A (UP) and V (DOWN) characters at absolute columns."""
    cells: set[TriCell] = set()
    for row, (_, line) in enumerate(_content_lines(text)):
        for col, char in enumerate(line):
            if char == " ":
                continue
            if char == TRI_UP_CHAR:
                cells.add((row, col, "UP"))
            elif char == TRI_DOWN_CHAR:
                cells.add((row, col, "DOWN"))
            else:
                raise RegionParseError(
                    MSG_UNKNOWN_CHARACTER.format(char=char, row=row, col=col), row=row, col=col
                )
    return TriRegion(cells=frozenset(cells))


def parse_square_region(text: str) -> SquareRegion:
    """Parse a grid of X characters at absolute columns."""
    cells: set[SquareCell] = set()
    for row, (_, line) in enumerate(_content_lines(text)):
        for col, char in enumerate(line):
            if char == " ":
                continue
            if char != SQUARE_CHAR:
                raise RegionParseError(
                    MSG_UNKNOWN_CHARACTER.format(char=char, row=row, col=col), row=row, col=col
                )
            cells.add((row, col))
    return SquareRegion(cells=frozenset(cells))


def parse_weight(token: str, *, row: int | None = None) -> Fraction:
    """Parse p or p/q into a positive Fraction."""
    match = _RATIONAL.match(token)
    if not match or (match.group(2) is not None and int(match.group(2)) == 0):
        raise RegionParseError(f"malformed weight {token!r} on line {row}", row=row)
    weight = Fraction(int(match.group(1)), int(match.group(2) or 1))
    if weight == 0:
        raise RegionParseError(f"weight must be positive on line {row}", row=row)
    return weight


def parse_cell_complex(text: str) -> CellComplex:
    """Parse `cell`, `edge` and `face` lines; `#` starts a comment."""
    cells: list[ComplexCell] = []
    colors: dict[str, CellColor | None] = {}
    edges: list[ComplexEdge] = []
    faces: list[tuple[int, ...]] = []
    for row, raw in enumerate(text.splitlines()):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if keyword == "cell" and len(args) in (1, 2):
            color: CellColor | None = None
            if len(args) == 2:
                if args[1].lower() not in ("black", "white"):
                    raise RegionParseError(f"unknown color {args[1]!r} on line {row}", row=row)
                color = "BLACK" if args[1].lower() == "black" else "WHITE"
            if args[0] in colors:
                raise RegionParseError(f"duplicate cell {args[0]!r} on line {row}", row=row)
            colors[args[0]] = color
            cells.append(ComplexCell(id=args[0], color=color))
        elif keyword == "edge" and len(args) in (2, 3):
            for endpoint in args[:2]:
                if endpoint not in colors:
                    raise RegionParseError(
                        f"dangling edge endpoint {endpoint!r} on line {row}", row=row
                    )
            first, second = colors[args[0]], colors[args[1]]
            if first is not None and first == second:
                raise RegionParseError(f"edge joins two {first} cells on line {row}", row=row)
            weight = parse_weight(args[2], row=row) if len(args) == 3 else Fraction(1)
            edges.append(ComplexEdge(a=args[0], b=args[1], weight=weight))
        elif keyword == "face" and args:
            try:
                faces.append(tuple(int(token) for token in args))
            except ValueError as exc:
                raise RegionParseError(f"face edges must be edge numbers on line {row}", row=row) from exc
        else:
            raise RegionParseError(f"cannot parse line {row}: {raw.strip()!r}", row=row)
    try:
        return CellComplex(cells=tuple(cells), edges=tuple(edges), faces=tuple(faces) or None)
    except ValueError as exc:
        raise RegionValidationError(str(exc)) from exc


def _grid_text(chars: dict[tuple[int, int], str]) -> str:
    """Lay out characters translated so the minimum row and column are 0."""
    if not chars:
        return ""
    top = min(row for row, _ in chars)
    left = min(col for _, col in chars)
    bottom = max(row for row, _ in chars)
    lines = []
    for row in range(top, bottom + 1):
        cols = [col for r, col in chars if r == row]
        width = max(cols) - left + 1 if cols else 0
        line = [" "] * width
        for col in cols:
            line[col - left] = chars[(row, col)]
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"


def _weight_text(weight: Fraction) -> str:
    """Weight rendered as p or p/q."""
    return str(weight.numerator) if weight.denominator == 1 else f"{weight.numerator}/{weight.denominator}"


def serialize_region(region: TriRegion | SquareRegion | CellComplex) -> str:
    """Render a region in its file format."""
    if isinstance(region, TriRegion):
        return _grid_text(
            {(row, col): TRI_UP_CHAR if orientation == "UP" else TRI_DOWN_CHAR for row, col, orientation in region.cells}
        )
    if isinstance(region, SquareRegion):
        return _grid_text({cell: SQUARE_CHAR for cell in region.cells})
    lines = []
    for cell in region.cells:
        lines.append(f"cell {cell.id}" + (f" {cell.color.lower()}" if cell.color else ""))
    for edge in region.edges:
        suffix = "" if edge.weight == 1 else f" {_weight_text(edge.weight)}"
        lines.append(f"edge {edge.a} {edge.b}{suffix}")
    for face in region.faces or ():
        lines.append("face " + " ".join(str(index) for index in face))
    return "\n".join(lines) + "\n"
