"""Closed forms the counts are compared against."""

from __future__ import annotations

from fractions import Fraction

from src.contracts.models import HexagonSpec


def macmahon(spec: HexagonSpec) -> int:
    """Product over the a x b x c box of (i+j+k+2)/(i+j+k+1)."""
    product = Fraction(1)
    for i in range(spec.a):
        for j in range(spec.b):
            for k in range(spec.c):
                product *= Fraction(i + j + k + 2, i + j + k + 1)
    if product.denominator != 1:
        raise ArithmeticError(f"MacMahon product for {spec} is not an integer: {product}")
    return product.numerator


def aztec_power(n: int) -> int:
    """2^(n(n+1)/2) tilings of the order-n Aztec diamond."""
    return 2 ** (n * (n + 1) // 2)


def invsum_closed_form(n: int) -> Fraction:
    """(n-1)(n+3)/2 - 2^(n-1) + 2."""
    return Fraction((n - 1) * (n + 3), 2) - 2 ** (n - 1) + 2


def vertical_moment_closed_form(n: int) -> Fraction:
    """(n^4 - n^2)/6."""
    return Fraction(n**4 - n**2, 6)
