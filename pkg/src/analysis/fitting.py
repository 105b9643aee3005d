"""Polynomial and linear-recurrence fitting, series expansion, window polynomials."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.polyfuncs import interpolate
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import ring

from config.constants import WINDOW_DECOMPOSITIONS
from config.settings import settings
from src.contracts.models import SequenceFit
from src.linalg.matrices import rational_matrix, to_fraction_rows
from src.utils.logging import log_event

X = Symbol("x")
Number = int | Fraction


def _fraction(value: Rational) -> Fraction:
    """sympy Rational to Fraction."""
    return Fraction(int(value.p), int(value.q))


def _exact(value: Fraction) -> Number:
    """Plain int when integral."""
    return value.numerator if value.denominator == 1 else value


def polynomial(coefficients: Sequence[Number]) -> Poly:
    """Poly in x over QQ from coefficients low degree first."""
    return Poly(
        [Rational(Fraction(value).numerator, Fraction(value).denominator) for value in reversed(coefficients)]
        or [0],
        X,
        domain=QQ,
    )


def coefficients_low_first(poly: Poly) -> tuple[Fraction, ...]:
    """Coefficients of a univariate Poly, constant term first."""
    return tuple(_fraction(value) for value in reversed(poly.all_coeffs()))


def evaluate(coefficients: Sequence[Fraction], x: Number) -> Fraction:
    """Horner evaluation."""
    total = Fraction(0)
    for value in reversed(coefficients):
        total = total * x + value
    return total


def fit_polynomial(points: Sequence[tuple[int, Number]], heldout: int | None = None) -> SequenceFit:
    """Least-degree interpolant confirmed on at least `heldout` further points."""
    heldout = settings.FIT_HELDOUT if heldout is None else heldout
    if len(points) < max(2, heldout + 1):
        raise ValueError(f"need at least {max(2, heldout + 1)} points, got {len(points)}")
    abscissae = [x for x, _ in points]
    if len(set(abscissae)) != len(abscissae):
        raise ValueError("abscissae must be distinct")
    terms = tuple(Fraction(y) for _, y in points)
    for degree in range(len(points) - heldout):
        sample = [(x, Rational(Fraction(y).numerator, Fraction(y).denominator)) for x, y in points[: degree + 1]]
        poly = Poly(interpolate(sample, X), X, domain=QQ) if degree else polynomial([terms[0]])
        coefficients = coefficients_low_first(poly)
        if all(evaluate(coefficients, x) == y for (x, _), y in zip(points, terms)):
            log_event("polynomial_fitted", degree=poly.degree(), points=len(points))
            return SequenceFit(
                kind="POLYNOMIAL",
                terms=terms,
                coefficients=coefficients,
                order=max(poly.degree(), 0),
                heldout=len(points) - degree - 1,
            )
    return SequenceFit(kind="NONE", terms=terms)


def _echelon_solution(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact solution of an overdetermined rational system, None when inconsistent.

    Free unknowns of a rank-deficient system are set to zero.
    """
    width = len(rows[0])
    reduced, pivots = rational_matrix([row + [value] for row, value in zip(rows, rhs)]).rref()
    if width in pivots:
        return None
    solution = [Fraction(0)] * width
    for row, column in zip(to_fraction_rows(reduced), pivots):
        solution[column] = row[width]
    return solution


def fit_recurrence(
    terms: Sequence[Number], max_order: int | None = None, heldout: int | None = None
) -> SequenceFit:
    """Shortest integer recurrence c_n = r1 c_(n-1) + ... + rk c_(n-k) fitting every term.

    Order k must hold for every n >= k and leave at least `heldout` terms past
    the first k equations. The all-zero sequence is the empty recurrence of
    order 0; a rank-deficient system resolves at its own order with the free
    coefficients at zero.
    """
    max_order = settings.RECURRENCE_MAX_ORDER if max_order is None else max_order
    heldout = settings.FIT_HELDOUT if heldout is None else heldout
    values = [Fraction(value) for value in terms]
    if values and all(value == 0 for value in values):
        log_event("recurrence_fitted", order=0, terms=len(values))
        return SequenceFit(kind="RECURRENCE", terms=tuple(values), order=0, heldout=len(values))
    for order in range(1, max_order + 1):
        if len(values) < 2 * order + heldout:
            break
        rows = [[values[n - i] for i in range(1, order + 1)] for n in range(order, len(values))]
        solution = _echelon_solution(rows, values[order:])
        if solution is None or any(value.denominator != 1 for value in solution):
            continue
        log_event("recurrence_fitted", order=order, terms=len(values))
        return SequenceFit(
            kind="RECURRENCE",
            terms=tuple(values),
            coefficients=tuple(solution),
            order=order,
            heldout=len(values) - 2 * order,
        )
    return SequenceFit(kind="NONE", terms=tuple(values))


def series_coefficients(
    numerator: Sequence[Number], denominator: Sequence[Number], count: int
) -> list[Number]:
    """First `count` Taylor coefficients of numerator / denominator (low degree first)."""
    if not denominator or Fraction(denominator[0]) == 0:
        raise ValueError("denominator must have a nonzero constant term")
    series_ring, t = ring("t", QQ)

    def element(coefficients: Sequence[Number]):
        total = series_ring.zero
        for power, value in enumerate(coefficients):
            value = Fraction(value)
            total += series_ring(QQ(value.numerator, value.denominator)) * t**power
        return total

    product = rs_mul(element(numerator), rs_series_inversion(element(denominator), t, count), t, count)
    result = []
    for power in range(count):
        value = product.get((power,), QQ.zero)
        result.append(_exact(Fraction(int(value.numerator), int(value.denominator))))
    return result


def window_evenness(coefficients: Sequence[Number], w: int) -> bool:
    """True when the polynomial in t = x + w/4 has no odd-degree terms."""
    shifted = polynomial(coefficients).shift(-Rational(w, 4))
    return all(value == 0 for value in coefficients_low_first(shifted)[1::2])


def window_decomposition_value(w: int, x: int) -> Fraction:
    """left(middle((x + w/4)^2)) from the tabulated decompositions."""
    if w not in WINDOW_DECOMPOSITIONS:
        raise ValueError(f"no tabulated decomposition for w={w}; known: {sorted(WINDOW_DECOMPOSITIONS)}")
    (scale, power), middle = WINDOW_DECOMPOSITIONS[w]
    right = (x + Fraction(w, 4)) ** 2
    return scale * evaluate(list(middle), right) ** power
