"""Weight polynomials with half-integer exponents stored doubled."""

from __future__ import annotations

from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, PolyRing, ring

Exponents = tuple[int, ...]


def rectangle_variables(m: int, n: int) -> tuple[str, ...]:
    """x1..x(n-1) for column boundaries, then y1..y(m-1) for row boundaries."""
    return tuple(f"x{j}" for j in range(1, n)) + tuple(f"y{i}" for i in range(1, m))


def root_ring(variables: Iterable[str]) -> tuple[PolyRing, dict[str, PolyElement]]:
    """Integer ring whose generators stand for the square roots of the variables."""
    names = tuple(variables)
    root, *gens = ring(",".join(names), ZZ)
    return root, dict(zip(names, gens))


class WeightPolynomial(BaseModel):
    """Sparse integer polynomial; exponents count half-steps.

    ``terms`` maps a doubled exponent vector (ordered like ``variables``) to a
    nonzero coefficient.
    """

    model_config = ConfigDict(frozen=True)

    variables: tuple[str, ...]
    terms: dict[Exponents, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_terms(self) -> WeightPolynomial:
        """Exponent vectors match the variables; no zero coefficients."""
        for exponents, coefficient in self.terms.items():
            if len(exponents) != len(self.variables):
                raise ValueError(f"exponent vector {exponents} does not match {len(self.variables)} variables")
            if coefficient == 0:
                raise ValueError(f"zero coefficient stored for {exponents}")
        return self

    @classmethod
    def from_element(cls, element: PolyElement, variables: tuple[str, ...]) -> WeightPolynomial:
        """Wrap a root-ring element."""
        return cls(
            variables=variables,
            terms={tuple(monomial): int(coefficient) for monomial, coefficient in element.items() if coefficient},
        )

    @property
    def integral(self) -> bool:
        """True when every stored exponent is even."""
        return all(value % 2 == 0 for exponents in self.terms for value in exponents)

    def total(self) -> int:
        """Value with every variable set to 1."""
        return sum(self.terms.values())

    def specialize_zero(self, names: Iterable[str]) -> WeightPolynomial:
        """Set the named variables to zero."""
        zeroed = [self.variables.index(name) for name in names if name in self.variables]
        return WeightPolynomial(
            variables=self.variables,
            terms={
                exponents: coefficient
                for exponents, coefficient in self.terms.items()
                if all(exponents[index] == 0 for index in zeroed)
            },
        )

    def _sort_key(self, exponents: Exponents) -> tuple[int, ...]:
        """Variable indices with multiplicity, compared lexicographically."""
        return tuple(index for index, value in enumerate(exponents) for _ in range(value))

    def render_monomial(self, exponents: Exponents) -> str:
        """x1*x3^2 style; half powers appear as ^(k/2)."""
        factors = []
        for name, value in zip(self.variables, exponents):
            if not value:
                continue
            if value % 2:
                factors.append(f"{name}^({value}/2)")
            elif value == 2:
                factors.append(name)
            else:
                factors.append(f"{name}^{value // 2}")
        return "*".join(factors) or "1"

    def render(self) -> str:
        """Canonical text, monomials in sorted variable order."""
        if not self.terms:
            return "0"
        parts = []
        for exponents in sorted(self.terms, key=self._sort_key):
            coefficient = self.terms[exponents]
            monomial = self.render_monomial(exponents)
            magnitude = abs(coefficient)
            if monomial == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if coefficient < 0 else body)
            else:
                parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
        return " ".join(parts)

    def difference(self, other: WeightPolynomial) -> tuple[str, ...]:
        """Monomials whose coefficients disagree, as 'monomial: self vs other'."""
        if self.variables != other.variables:
            raise ValueError("polynomials use different variables")
        keys = sorted(set(self.terms) | set(other.terms), key=self._sort_key)
        return tuple(
            f"{self.render_monomial(key)}: {self.terms.get(key, 0)} vs {other.terms.get(key, 0)}"
            for key in keys
            if self.terms.get(key, 0) != other.terms.get(key, 0)
        )

    def __str__(self) -> str:
        return self.render()
