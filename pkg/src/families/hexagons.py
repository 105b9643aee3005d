"""Semiregular and holey hexagons on the triangular lattice."""

from __future__ import annotations

from typing import NamedTuple

from src.contracts.models import HexagonSpec, HoleyKind
from src.grid.regions import TriCell, TriRegion


class HexagonFrame(NamedTuple):
    """Row geometry of a hexagon with sides (top, upper-right, lower-right, bottom, lower-left, upper-left)."""

    sides: tuple[int, int, int, int, int, int]
    left0: int
    right0: int

    @property
    def rows(self) -> int:
        """Number of triangle rows."""
        return self.sides[1] + self.sides[2]

    def bounds(self, row: int) -> tuple[int, int]:
        """First and last column of a row."""
        _, upper_right, _, _, _, upper_left = self.sides
        left = self.left0 - row if row < upper_left else self.left0 - 2 * upper_left + 1 + row
        right = (
            self.right0 + row if row < upper_right else self.right0 + 2 * upper_right - 1 - row
        )
        return left, right

    def is_up(self, row: int, col: int) -> bool:
        """Triangle orientation is fixed by lattice parity."""
        return (row + col - self.left0) % 2 == 0


def hexagon_frame(sides: tuple[int, int, int, int, int, int]) -> HexagonFrame:
    """Validate closure of the six sides and place the top-left corner."""
    top, upper_right, lower_right, bottom, lower_left, upper_left = sides
    if min(sides) < 1:
        raise ValueError(f"hexagon sides must be positive, got {sides}")
    if upper_right + lower_right != lower_left + upper_left:
        raise ValueError(f"hexagon sides {sides} do not close vertically")
    if 2 * top + upper_right - lower_right != 2 * bottom + lower_left - upper_left:
        raise ValueError(f"hexagon sides {sides} do not close horizontally")
    left0 = upper_left - 1
    return HexagonFrame(sides=sides, left0=left0, right0=left0 + 2 * top)


def frame_region(frame: HexagonFrame) -> TriRegion:
    """Fill every row of a frame between its boundary columns."""
    cells: set[TriCell] = set()
    for row in range(frame.rows):
        left, right = frame.bounds(row)
        for col in range(left, right + 1):
            cells.add((row, col, "UP" if frame.is_up(row, col) else "DOWN"))
    return TriRegion(cells=frozenset(cells))


def semiregular_frame(spec: HexagonSpec) -> HexagonFrame:
    """Frame of the a,b,c,a,b,c hexagon."""
    return hexagon_frame((spec.a, spec.b, spec.c, spec.a, spec.b, spec.c))


def hexagon(spec: HexagonSpec) -> TriRegion:
    """The a,b,c semiregular hexagon."""
    return frame_region(semiregular_frame(spec))


def holey_hexagon(kind: HoleyKind, n: int) -> TriRegion:
    """Hexagon families with small holes or a marked central pair."""
    if n < 1:
        raise ValueError(f"family index must be positive, got {n}")
    if kind == "CENTRAL_TRIANGLE":
        frame = hexagon_frame((n, n + 1, n, n + 1, n, n + 1))
        return frame_region(frame).remove((n, frame.left0 + n))
    if kind == "THREE_SIDES":
        frame = hexagon_frame((2 * n, 2 * n + 3, 2 * n, 2 * n + 3, 2 * n, 2 * n + 3))
        bottom = frame.rows - 1
        bottom_left, _ = frame.bounds(bottom)
        return frame_region(frame).remove(
            (n + 1, frame.left0 - (n + 1)),
            (n + 1, frame.right0 + n + 1),
            (bottom, bottom_left + 2 * n + 3),
        )
    if kind in ("OPPOSITE_PAIR", "ADJACENT_PAIR"):
        frame = semiregular_frame(HexagonSpec(a=n, b=n, c=n))
        center = frame.left0 + n
        if kind == "OPPOSITE_PAIR":
            return frame_region(frame).remove((n - 1, center), (n, center))
        return frame_region(frame).remove((n - 1, center - 1), (n, center - 1))
    if kind == "CENTRAL_EDGE_HEX":
        frame = semiregular_frame(HexagonSpec(a=2 * n - 1, b=2 * n, c=2 * n - 1))
        middle = 2 * n - 1
        region = frame_region(frame)
        return TriRegion(
            cells=region.cells,
            marked=((middle, frame.left0 + 2 * n - 1), (middle, frame.left0 + 2 * n)),
        )
    raise ValueError(f"unknown holey hexagon kind {kind!r}")


def central_pair(n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Adjacent UP/DOWN pair removed by ADJACENT_PAIR, as an edge of hexagon(n,n,n)."""
    frame = semiregular_frame(HexagonSpec(a=n, b=n, c=n))
    center = frame.left0 + n
    return (n - 1, center - 1), (n, center - 1)
