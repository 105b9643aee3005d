"""Shared parameter and result contracts for engines, analyses and the CLI."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.constants import ENGINE_LITERALS, FORMAT_LITERALS, FORMAT_TEXT

AztecKind = Literal[
    "DIAMOND",
    "CENTER_PAIR_REMOVED",
    "KNIGHT_PAIR_REMOVED",
    "RECT_CENTER_HOLE",
    "RECT_ADJACENT_HOLE",
    "INTRUDED_SQUARE",
    "PILLOW_0MOD4",
    "PILLOW_2MOD4",
    "WINDOW",
]
HoleyKind = Literal[
    "CENTRAL_TRIANGLE",
    "THREE_SIDES",
    "OPPOSITE_PAIR",
    "ADJACENT_PAIR",
    "CENTRAL_EDGE_HEX",
]
FitKind = Literal["POLYNOMIAL", "RECURRENCE", "NONE"]


class HexagonSpec(BaseModel):
    """Side lengths of the a,b,c,a,b,c semiregular hexagon."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(ge=1, description="First side length.")
    b: int = Field(ge=1, description="Second side length.")
    c: int = Field(ge=1, description="Third side length.")

    def rotated(self) -> HexagonSpec:
        """Return the cyclic rotation (b, c, a)."""
        return HexagonSpec(a=self.b, b=self.c, c=self.a)


class AztecSpec(BaseModel):
    """Parameters of one square-lattice region family member."""

    model_config = ConfigDict(frozen=True)

    kind: AztecKind = Field(description="Region family.")
    n: int = Field(default=1, ge=1, description="Order of the region (unused by WINDOW).")
    x: int = Field(default=0, ge=0, description="Inner diamond order (WINDOW only).")
    w: int = Field(default=2, ge=1, description="Window width y - x (WINDOW only).")
    m: int | None = Field(
        default=None,
        ge=0,
        description="Intrusion length (INTRUDED_SQUARE only); defaults to n/2.",
    )

    @model_validator(mode="after")
    def validate_kind_parameters(self) -> AztecSpec:
        """Reject parameter combinations with no region."""
        if self.kind == "WINDOW" and self.w % 2:
            raise ValueError("WINDOW requires an even width w; odd widths have no tilings")
        if self.kind == "INTRUDED_SQUARE":
            if self.m is None and self.n % 2:
                raise ValueError("INTRUDED_SQUARE with default intrusion requires even n")
            if self.m is not None and self.m > self.n:
                raise ValueError("intrusion length m cannot exceed n")
        if self.kind == "KNIGHT_PAIR_REMOVED" and self.n < 2:
            raise ValueError("KNIGHT_PAIR_REMOVED requires n >= 2")
        return self

    @property
    def intrusion(self) -> int:
        """Effective intrusion length for INTRUDED_SQUARE."""
        return self.n // 2 if self.m is None else self.m


class RectangleSpec(BaseModel):
    """Even-by-even rectangle for weighted dimer coverings."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=2, description="Number of rows (even).")
    n: int = Field(ge=2, description="Number of columns (even).")

    @field_validator("m", "n")
    @classmethod
    def validate_even(cls, value: int) -> int:
        """Both dimensions must be even."""
        if value % 2:
            raise ValueError(f"rectangle dimensions must be even, got {value}")
        return value


class UrbanRenewalWeights(BaseModel):
    """City weights a,b,c,d and the rescaled weights after the move."""

    model_config = ConfigDict(frozen=True)

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @field_validator("a", "b", "c", "d")
    @classmethod
    def validate_positive(cls, value: Fraction) -> Fraction:
        """City weights must be positive rationals."""
        if value <= 0:
            raise ValueError(f"weights must be positive, got {value}")
        return value

    @property
    def factor(self) -> Fraction:
        """The multiplicative factor ac + bd."""
        return self.a * self.c + self.b * self.d

    @property
    def rescaled(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """A, B, C, D = a, b, c, d each divided by ac + bd."""
        factor = self.factor
        return (self.a / factor, self.b / factor, self.c / factor, self.d / factor)


class SNFResult(BaseModel):
    """Smith normal form diagonal with the divisibility chain enforced."""

    model_config = ConfigDict(frozen=True)

    diagonal: tuple[int, ...] = Field(
        description="Invariant factors d1 | d2 | ... (zeros last), one per min(rows, cols)."
    )
    rank: int = Field(ge=0)

    @model_validator(mode="after")
    def validate_chain(self) -> SNFResult:
        """Each nonzero entry divides the next and zeros come last."""
        for left, right in zip(self.diagonal, self.diagonal[1:]):
            if left < 0 or right < 0:
                raise ValueError("invariant factors must be nonnegative")
            if left == 0 and right != 0:
                raise ValueError("zero invariant factors must come last")
            if left and right % left:
                raise ValueError(f"divisibility chain broken: {left} does not divide {right}")
        return self


class FactoredCount(BaseModel):
    """A count with its prime factorization and square-structure tag."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=1)
    factors: tuple[tuple[int, int], ...] = Field(
        default=(), description="(prime, exponent) pairs sorted by prime."
    )
    structure: str = Field(description="One of the STRUCTURE_* tags.")
    structure_param: int | None = Field(
        default=None, description="k for POW2_TIMES_ODD_SQUARE, s for SQUARE_TIMES_SMALL."
    )

    @property
    def largest_prime(self) -> int | None:
        """Largest prime factor, None for the value 1."""
        return self.factors[-1][0] if self.factors else None


class RoundnessReport(BaseModel):
    """Largest prime factor against the family index."""

    model_config = ConfigDict(frozen=True)

    parameter: int = Field(ge=1)
    largest_prime: int | None
    ratio: Fraction | None = Field(description="largest_prime / parameter.")
    structure: str
    structure_param: int | None = None
    square_free: int = Field(ge=1, description="Square-free part of the odd part.")
    outlier: bool = Field(
        default=False, description="Largest prime exceeds the configured multiple of n."
    )


class MomentRow(BaseModel):
    """One horizontal edge with its probability and centered coordinates."""

    model_config = ConfigDict(frozen=True)

    edge: tuple[tuple[int, int], tuple[int, int]]
    probability: Fraction
    x: Fraction = Field(description="Centered row coordinate.")
    y: Fraction = Field(description="Centered column coordinate.")


class MomentReport(BaseModel):
    """Horizontal-edge probability table and both moments of inertia."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[MomentRow, ...]
    vertical: Fraction
    horizontal: Fraction
    regular: bool = Field(
        default=True,
        description="False when coordinates follow the non-regular hexagon convention.",
    )


class HoleyRatioReport(BaseModel):
    """Adjacent-pair holey hexagon count over the full hexagon count."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    holey_count: int
    total: int
    ratio: Fraction
    probability: Fraction = Field(description="Edge probability of the removed pair.")
    excess: Fraction = Field(description="ratio - 1/3.")
    excess_numerator: str
    excess_denominator: str


class SequenceFit(BaseModel):
    """Outcome of polynomial or recurrence fitting."""

    model_config = ConfigDict(frozen=True)

    kind: FitKind
    terms: tuple[Fraction, ...] = Field(description="Input values.")
    coefficients: tuple[Fraction, ...] = Field(
        default=(),
        description=(
            "Polynomial coefficients low degree first, or recurrence coefficients "
            "r1..rk of c_n = r1*c_(n-1) + ... + rk*c_(n-k)."
        ),
    )
    order: int | None = Field(default=None, description="Degree or recurrence order.")
    heldout: int = Field(default=0, ge=0, description="Number of held-out terms matched.")


class IdentityCheck(BaseModel):
    """Verdict of a polynomial identity on one rectangle."""

    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    verdict: str = Field(description="VERDICT_EQUAL or VERDICT_DIFFERENT.")
    left: str = Field(description="Rendered left-hand polynomial.")
    right: str = Field(description="Rendered right-hand polynomial.")
    difference: tuple[str, ...] = Field(
        default=(), description="Monomials whose coefficients differ, as 'monomial: left vs right'."
    )


class RewriteCheck(BaseModel):
    """Brute-force confirmation of a local substitution on one host graph."""

    model_config = ConfigDict(frozen=True)

    move: str
    host: str = Field(description="Short description of the host graph.")
    factor: Fraction = Field(description="Factor claimed by the move.")
    before: Fraction = Field(description="Weighted matching sum of the host.")
    after: Fraction = Field(description="Weighted matching sum after the move.")

    @property
    def holds(self) -> bool:
        """before == factor * after."""
        return self.before == self.factor * self.after

    @property
    def measured(self) -> Fraction | None:
        """before / after, None when the rewritten graph has no matchings."""
        return self.before / self.after if self.after else None


class SweepRecord(BaseModel):
    """One row of a parameter sweep."""

    model_config = ConfigDict(frozen=True)

    parameter: int
    count: int | None = None
    factored: FactoredCount | None = None
    engine: str | None = None
    seconds: float = 0.0
    error: str | None = None


class VerifyRecord(BaseModel):
    """One per-instance comparison of a formula against a computation."""

    model_config = ConfigDict(frozen=True)

    parameter: str
    expected: str
    actual: str
    passed: bool


class CommandSpec(BaseModel):
    """Normalized command-line request."""

    model_config = ConfigDict(extra="forbid")

    subcommand: str
    file: str | None = None
    family: str | None = None
    params: dict[str, int] = Field(default_factory=dict)
    method: str | None = None
    output_format: str = FORMAT_TEXT
    sweep_range: tuple[int, int] | None = None

    @field_validator("method")
    @classmethod
    def validate_method(cls, value: str | None) -> str | None:
        """Engine override must be a known engine."""
        if value is not None and value not in ENGINE_LITERALS:
            raise ValueError(f"Invalid method: {value}")
        return value

    @field_validator("output_format")
    @classmethod
    def validate_format(cls, value: str) -> str:
        """Output format must be text or tsv."""
        if value not in FORMAT_LITERALS:
            raise ValueError(f"Invalid format: {value}")
        return value

    @model_validator(mode="after")
    def validate_source(self) -> CommandSpec:
        """At most one region source; sweep ranges finite and ordered."""
        if self.file is not None and self.family is not None:
            raise ValueError("use either --file or --family, not both")
        if self.sweep_range is not None and self.sweep_range[0] > self.sweep_range[1]:
            raise ValueError(f"empty range {self.sweep_range[0]}..{self.sweep_range[1]}")
        return self
