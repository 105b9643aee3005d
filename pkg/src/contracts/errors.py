"""Project exception hierarchy."""

from __future__ import annotations


class MatchworkError(RuntimeError):
    """Base class for every failure raised by the workbench."""


class RegionParseError(MatchworkError):
    """Raised when a region file contains an unexpected token."""

    def __init__(self, message: str, *, row: int | None = None, col: int | None = None) -> None:
        super().__init__(message)
        self.row = row
        self.col = col


class RegionValidationError(MatchworkError):
    """Raised when a parsed region or cell complex is inconsistent."""


class EngineError(MatchworkError):
    """Raised when an engine gets a graph outside its class or detects an internal bug."""


class SizeLimitError(MatchworkError):
    """Raised when an instance exceeds a configured desk-scale cap."""


class SingularMatrixError(MatchworkError):
    """Raised when an exact inverse is requested for a singular matrix."""


class PatternMismatchError(MatchworkError):
    """Raised when a local rewrite site does not match its pattern."""


class UnknownFormulaError(MatchworkError):
    """Raised for verify ids missing from the formula registry."""


class UnknownFamilyError(MatchworkError):
    """Raised for family names missing from the family registry."""
