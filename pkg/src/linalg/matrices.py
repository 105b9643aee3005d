"""Exact integer and rational matrix operations on sympy domain matrices."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import Poly, Symbol, integer_nthroot
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from config.constants import MSG_SINGULAR
from src.contracts.errors import SingularMatrixError

T = Symbol("t")


def int_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    """Build a dense integer matrix from nested rows."""
    return DomainMatrix([[ZZ(int(value)) for value in row] for row in rows], _shape(rows), ZZ)


def rational_matrix(rows: Sequence[Sequence[Fraction | int]]) -> DomainMatrix:
    """Build a dense rational matrix; entries are kept in lowest terms by the domain."""
    return DomainMatrix(
        [[QQ(Fraction(value).numerator, Fraction(value).denominator) for value in row] for row in rows],
        _shape(rows),
        QQ,
    )


def _shape(rows: Sequence[Sequence[object]]) -> tuple[int, int]:
    """Shape of nested rows, validating that they are rectangular."""
    height = len(rows)
    width = len(rows[0]) if height else 0
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows have different lengths")
    return height, width


def to_fraction(value: object) -> Fraction:
    """Convert a ZZ or QQ domain element to a Fraction."""
    numerator = getattr(value, "numerator", value)
    denominator = getattr(value, "denominator", 1)
    return Fraction(int(numerator), int(denominator))


def to_int_rows(matrix: DomainMatrix) -> list[list[int]]:
    """Return integer entries as plain Python ints."""
    return [[int(value) for value in row] for row in matrix.to_list()]


def to_fraction_rows(matrix: DomainMatrix) -> list[list[Fraction]]:
    """Return entries as Fractions."""
    return [[to_fraction(value) for value in row] for row in matrix.to_list()]


def _require_square(matrix: DomainMatrix) -> int:
    """Return the order of a square matrix."""
    rows, cols = matrix.shape
    if rows != cols:
        raise ValueError(f"square matrix required, got {rows}x{cols}")
    return rows


def det_bareiss(matrix: DomainMatrix) -> int:
    """Exact determinant by fraction-free elimination over ZZ."""
    order = _require_square(matrix)
    if order == 0:
        return 1
    return int(matrix.convert_to(ZZ).to_dense().det())


def det_rational(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Determinant of a rational matrix: clear row denominators, Bareiss, divide back."""
    scale = 1
    cleared: list[list[int]] = []
    for row in rows:
        entries = [Fraction(value) for value in row]
        multiplier = lcm(*(entry.denominator for entry in entries)) if entries else 1
        scale *= multiplier
        cleared.append([int(entry * multiplier) for entry in entries])
    if not cleared:
        return Fraction(1)
    return Fraction(det_bareiss(int_matrix(cleared)), scale)


def inverse_rational(matrix: DomainMatrix) -> DomainMatrix:
    """Exact inverse over QQ."""
    _require_square(matrix)
    field = matrix.convert_to(QQ).to_dense()
    if field.shape[0] and field.det() == 0:
        raise SingularMatrixError(MSG_SINGULAR)
    return field.inv()


def entry_sum(matrix: DomainMatrix) -> Fraction:
    """Sum of all entries, exactly."""
    return sum((to_fraction(value) for row in matrix.to_list() for value in row), Fraction(0))


def char_poly_gram(matrix: DomainMatrix) -> Poly:
    """Characteristic polynomial of K * K^T, monic in t."""
    integer = matrix.convert_to(ZZ).to_dense()
    gram = integer * integer.transpose()
    rows, _ = gram.shape
    if rows == 0:
        return Poly(1, T, domain=ZZ)
    coefficients = [int(value) for value in gram.charpoly()]
    return Poly(coefficients, T, domain=ZZ)


def integer_sqrt(value: int) -> tuple[int, bool]:
    """Exact floor square root and whether it is exact."""
    if value < 0:
        raise ValueError(f"square root of negative integer {value}")
    root, exact = integer_nthroot(value, 2)
    return int(root), bool(exact)
