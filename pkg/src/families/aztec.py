"""Aztec diamonds, rectangles, windows, intruded squares and even pillows."""

from __future__ import annotations

from src.contracts.models import AztecSpec
from src.grid.regions import SquareCell, SquareRegion


def _rows(spans: list[tuple[int, int]], top: int = 0) -> set[SquareCell]:
    """Cells of consecutive rows given (first column, width) per row."""
    return {
        (top + row, start + offset)
        for row, (start, width) in enumerate(spans)
        for offset in range(width)
    }


def diamond_cells(order: int) -> set[SquareCell]:
    """Rows of widths 2, 4, ..., 2n, 2n, ..., 4, 2 centered on one axis."""
    upper = [(order - 1 - i, 2 * (i + 1)) for i in range(order)]
    return _rows(upper + upper[::-1])


def rectangle_cells(rows: int, cols: int) -> set[SquareCell]:
    """Plain rows x cols rectangle."""
    return {(row, col) for row in range(rows) for col in range(cols)}


def aztec_rectangle_cells(a: int) -> set[SquareCell]:
    """a x (a+1) Aztec rectangle: a diamond half, a middle row of 2a+1 squares, a shifted half."""
    upper = [(a - 1 - i, 2 * (i + 1)) for i in range(a)]
    lower = [(1 + k, 2 * (a - k)) for k in range(a)]
    return _rows(upper + [(0, 2 * a + 1)] + lower)


def pillow_cells(order: int, base_width: int) -> set[SquareCell]:
    """Staircase pillow: top rows step the indent by 3, bottom rows by 1, widths by 4."""
    top = [(3 * (order - 1 - t), base_width + 4 * t) for t in range(order)]
    bottom = [(t, base_width + 4 * (order - 1 - t)) for t in range(order)]
    return _rows(top + bottom)


def window_cells(x: int, w: int) -> set[SquareCell]:
    """Order (x + w) diamond minus the centered order-x diamond."""
    outer = diamond_cells(x + w)
    inner = {(row + w, col + w) for row, col in diamond_cells(x)}
    return outer - inner


def aztec(spec: AztecSpec) -> SquareRegion:
    """Square-lattice region for an AztecSpec."""
    n = spec.n
    if spec.kind == "DIAMOND":
        return SquareRegion(cells=frozenset(diamond_cells(n)))
    if spec.kind == "CENTER_PAIR_REMOVED":
        return SquareRegion(cells=frozenset(diamond_cells(n))).remove((n - 1, n - 1), (n, n - 1))
    if spec.kind == "KNIGHT_PAIR_REMOVED":
        return SquareRegion(cells=frozenset(diamond_cells(n))).remove((n - 2, n), (n, n - 1))
    if spec.kind == "RECT_CENTER_HOLE":
        a = 2 * n
        return SquareRegion(cells=frozenset(aztec_rectangle_cells(a))).remove((a, a))
    if spec.kind == "RECT_ADJACENT_HOLE":
        a = 2 * n - 1
        return SquareRegion(cells=frozenset(aztec_rectangle_cells(a))).remove((a - 1, a))
    if spec.kind == "INTRUDED_SQUARE":
        side = 2 * n
        removed = [
            cell
            for k in range(spec.intrusion)
            for cell in ((side - 1 - k, k), (side - 1 - k, k + 1))
        ]
        return SquareRegion(cells=frozenset(rectangle_cells(side, side))).remove(*removed)
    if spec.kind == "PILLOW_0MOD4":
        return SquareRegion(cells=frozenset(pillow_cells(n, 4)))
    if spec.kind == "PILLOW_2MOD4":
        return SquareRegion(cells=frozenset(pillow_cells(n, 2)))
    if spec.kind == "WINDOW":
        return SquareRegion(cells=frozenset(window_cells(spec.x, spec.w)))
    raise ValueError(f"unknown aztec kind {spec.kind!r}")


def rectangle(rows: int, cols: int) -> SquareRegion:
    """Plain rectangle region."""
    return SquareRegion(cells=frozenset(rectangle_cells(rows, cols)))
