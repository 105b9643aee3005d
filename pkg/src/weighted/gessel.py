"""Weighted dimer coverings of even rectangles against dimer tableaux."""

from __future__ import annotations

from itertools import combinations, product
from typing import Hashable

from sympy.polys.rings import PolyElement

from config.constants import MSG_SIZE_LIMIT, VERDICT_DIFFERENT, VERDICT_EQUAL
from config.settings import settings
from src.contracts.errors import EngineError, SizeLimitError
from src.contracts.models import IdentityCheck, RectangleSpec
from src.families.aztec import rectangle
from src.grid.dual import dual_graph
from src.kasteleyn.engines import matching_sum
from src.utils.logging import log_event
from src.weighted.polynomial import WeightPolynomial, rectangle_variables, root_ring

Row = tuple[int, tuple[int, ...]]


def dimer_polynomial(spec: RectangleSpec) -> WeightPolynomial:
    """Sum over domino tilings of the m x n rectangle of the product of domino weights.

    A horizontal domino over columns j, j+1 weighs sqrt(x_j); a vertical one
    over rows i, i+1 weighs sqrt(y_i).
    """
    cells = spec.m * spec.n
    if cells > settings.DIMER_MAX_CELLS:
        raise SizeLimitError(
            MSG_SIZE_LIMIT.format(what="dimer rectangle cells", value=cells, limit=settings.DIMER_MAX_CELLS)
        )
    variables = rectangle_variables(spec.m, spec.n)
    root, gens = root_ring(variables)

    def weight(u: Hashable, v: Hashable) -> PolyElement:
        (row_a, col_a), (row_b, col_b) = sorted((u, v))
        if row_a == row_b:
            return gens[f"x{col_a + 1}"]
        return gens[f"y{row_a + 1}"]

    plane = dual_graph(rectangle(spec.m, spec.n))
    polynomial = WeightPolynomial.from_element(matching_sum(plane, weight, root.one, root.zero), variables)
    if not polynomial.integral:
        raise EngineError(f"dimer polynomial of {spec.m}x{spec.n} has a half-integer exponent")
    log_event("dimer_polynomial_built", m=spec.m, n=spec.n, terms=len(polynomial.terms))
    return polynomial


def _upper_runs(length: int, top: int) -> list[tuple[int, ...]]:
    """Upper-left row segments from 1..top, each entry at least 2 more than its left neighbour."""
    return [
        run
        for run in combinations(range(1, top + 1), length)
        if all(right - left >= 2 for left, right in zip(run, run[1:]))
    ]


def _lower_runs(length: int, top: int) -> list[tuple[int, ...]]:
    """Lower-right row segments from 1..top with left <= right + 1."""
    return [
        run
        for run in product(range(1, top + 1), repeat=length)
        if all(left <= right + 1 for left, right in zip(run, run[1:]))
    ]


def _row_options(spec: RectangleSpec) -> list[Row]:
    """(split, entries) for every legal row; the first `split` cells are upper-left."""
    width = spec.n // 2
    rows: list[Row] = []
    for split in range(width + 1):
        for upper in _upper_runs(split, spec.n - 1):
            for lower in _lower_runs(width - split, spec.m - 1):
                rows.append((split, upper + lower))
    return rows


def _compatible(above: Row, below: Row) -> bool:
    """Column rules between vertically adjacent rows of one tableau."""
    split_above, entries_above = above
    split_below, entries_below = below
    if split_below > split_above:
        return False
    for col, (top, bottom) in enumerate(zip(entries_above, entries_below)):
        if col < split_below and top > bottom + 1:
            return False
        if col >= split_above and not top < bottom - 1:
            return False
    return True


def tableaux_polynomial(spec: RectangleSpec) -> WeightPolynomial:
    """Sum over (m/2) x (n/2) dimer tableaux of x_entry (upper-left) times y_entry (lower-right).

    The splitting path is exclusive: a cell belongs to exactly one part, and
    row and column rules only apply between cells of the same part.
    """
    height, width = spec.m // 2, spec.n // 2
    if height * width > settings.TABLEAUX_MAX_CELLS:
        raise SizeLimitError(
            MSG_SIZE_LIMIT.format(
                what="tableau cells", value=height * width, limit=settings.TABLEAUX_MAX_CELLS
            )
        )
    variables = rectangle_variables(spec.m, spec.n)
    root, gens = root_ring(variables)
    options = _row_options(spec)

    def row_weight(row: Row) -> PolyElement:
        split, entries = row
        value = root.one
        for col, entry in enumerate(entries):
            value *= gens[f"x{entry}" if col < split else f"y{entry}"] ** 2
        return value

    weights = {row: row_weight(row) for row in options}
    layer: dict[Row, PolyElement] = dict(weights)
    for _ in range(height - 1):
        following: dict[Row, PolyElement] = {}
        for above, partial in layer.items():
            for below in options:
                if _compatible(above, below):
                    following[below] = following.get(below, root.zero) + partial * weights[below]
        layer = following
    total = sum(layer.values(), root.zero)
    polynomial = WeightPolynomial.from_element(total, variables)
    log_event("tableaux_polynomial_built", m=spec.m, n=spec.n, terms=len(polynomial.terms))
    return polynomial


def _verdict(spec: RectangleSpec, left: WeightPolynomial, right: WeightPolynomial) -> IdentityCheck:
    difference = left.difference(right)
    return IdentityCheck(
        m=spec.m,
        n=spec.n,
        verdict=VERDICT_DIFFERENT if difference else VERDICT_EQUAL,
        left=left.render(),
        right=right.render(),
        difference=difference,
    )


def gessel_check(spec: RectangleSpec) -> IdentityCheck:
    """Dimer coverings against dimer tableaux, exact polynomial equality."""
    check = _verdict(spec, dimer_polynomial(spec), tableaux_polynomial(spec))
    log_event("gessel_checked", m=spec.m, n=spec.n, verdict=check.verdict)
    return check


def schur_product(spec: RectangleSpec) -> WeightPolynomial:
    """Product of (x_i + y_j) over odd i < n and odd j < m."""
    variables = rectangle_variables(spec.m, spec.n)
    root, gens = root_ring(variables)
    value = root.one
    for i in range(1, spec.n, 2):
        for j in range(1, spec.m, 2):
            value *= gens[f"x{i}"] ** 2 + gens[f"y{j}"] ** 2
    return WeightPolynomial.from_element(value, variables)


def schur_specialization_check(spec: RectangleSpec) -> IdentityCheck:
    """Dimer polynomial with even-indexed variables zeroed against the product form."""
    even = [name for name in rectangle_variables(spec.m, spec.n) if int(name[1:]) % 2 == 0]
    check = _verdict(spec, dimer_polynomial(spec).specialize_zero(even), schur_product(spec))
    log_event("schur_specialization_checked", m=spec.m, n=spec.n, verdict=check.verdict)
    return check
