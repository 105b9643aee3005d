"""Smith normal form and cokernel rendering."""

from __future__ import annotations

from math import gcd

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from src.contracts.models import SNFResult


def _normalize_chain(values: list[int], length: int) -> tuple[int, ...]:
    """Force the divisibility chain d1 | d2 | ... with zeros last."""
    chain = [abs(value) for value in values] + [0] * (length - len(values))
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            left, right = chain[i], chain[j]
            if left == 0 and right == 0:
                continue
            common = gcd(left, right)
            chain[i], chain[j] = common, (left * right // common if left and right else 0)
    return tuple(chain)


def smith_normal_form(matrix: DomainMatrix) -> SNFResult:
    """Invariant factors of an integer matrix, one per min(rows, cols)."""
    rows, cols = matrix.shape
    length = min(rows, cols)
    if length == 0:
        return SNFResult(diagonal=(), rank=0)
    factors = [int(value) for value in invariant_factors(matrix.convert_to(ZZ).to_dense())]
    diagonal = _normalize_chain(factors, length)
    return SNFResult(diagonal=diagonal, rank=sum(1 for value in diagonal if value))


def render_cokernel(snf: SNFResult) -> str:
    """Render Z^n / KZ^n as 'Z/2 x Z/10'; trivial group renders '0', free parts 'Z'."""
    parts = [f"Z/{value}" for value in snf.diagonal if value > 1]
    parts.extend("Z" for value in snf.diagonal if value == 0)
    return " x ".join(parts) if parts else "0"


def is_cyclic(snf: SNFResult) -> bool:
    """True when at most one invariant factor differs from 1."""
    return sum(1 for value in snf.diagonal if value != 1) <= 1
