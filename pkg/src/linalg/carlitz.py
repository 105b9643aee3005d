"""Carlitz binomial matrices of semiregular hexagons."""

from __future__ import annotations

from math import comb

from sympy.polys.matrices import DomainMatrix

from src.contracts.models import HexagonSpec
from src.linalg.matrices import int_matrix


def _binomial(top: int, bottom: int) -> int:
    """Binomial coefficient, zero outside 0 <= bottom <= top."""
    if bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def carlitz_matrix(spec: HexagonSpec) -> DomainMatrix:
    """b x b matrix with (i, j) entry C(a + c, a + i - j)."""
    size = spec.b
    return int_matrix(
        [[_binomial(spec.a + spec.c, spec.a + i - j) for j in range(size)] for i in range(size)]
    )


def cyclic_carlitz_matrices(spec: HexagonSpec) -> list[DomainMatrix]:
    """Carlitz matrices of (a,b,c), (b,c,a) and (c,a,b)."""
    specs = [spec, spec.rotated(), spec.rotated().rotated()]
    return [carlitz_matrix(item) for item in specs]
