"""Cokernels and K K^T spectra of Kasteleyn and Carlitz matrices."""

from __future__ import annotations

from sympy import Poly

from src.contracts.models import HexagonSpec, SNFResult
from src.families.hexagons import hexagon
from src.grid.dual import dual_graph
from src.grid.plane import PlaneGraph
from src.kasteleyn.orientation import KasteleynMatrix, sign_assignment
from src.linalg.carlitz import cyclic_carlitz_matrices
from src.linalg.matrices import char_poly_gram, det_bareiss
from src.linalg.snf import smith_normal_form


def integral_kasteleyn(plane: PlaneGraph) -> KasteleynMatrix:
    """Kasteleyn matrix that must have integer entries."""
    matrix = sign_assignment(plane)
    if not matrix.integral:
        raise ValueError("cokernel and spectrum need integer edge weights")
    return matrix


def kasteleyn_cokernel(spec: HexagonSpec) -> SNFResult:
    """Smith form of the Kasteleyn matrix of hexagon(a,b,c)."""
    return smith_normal_form(integral_kasteleyn(dual_graph(hexagon(spec))).to_domain())


def carlitz_cokernels(spec: HexagonSpec) -> list[tuple[int, SNFResult]]:
    """(|det|, Smith form) of the three cyclic Carlitz matrices."""
    return [
        (abs(det_bareiss(matrix)), smith_normal_form(matrix))
        for matrix in cyclic_carlitz_matrices(spec)
    ]


def nontrivial_factors(snf: SNFResult) -> tuple[int, ...]:
    """Invariant factors other than 1; these fix the cokernel."""
    return tuple(value for value in snf.diagonal if value != 1)


def spectrum(matrix: KasteleynMatrix) -> Poly:
    """Characteristic polynomial of K K^T."""
    return char_poly_gram(matrix.to_domain())


def render_poly(poly: Poly) -> str:
    """Stable text form of a polynomial, highest degree first."""
    return str(poly.as_expr())
