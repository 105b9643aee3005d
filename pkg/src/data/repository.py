"""Region-file loader with cached parsing."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from config.constants import CELLS_EXTENSION, REGION_EXTENSIONS, SQUARE_EXTENSION, TRI_EXTENSION
from src.contracts.errors import RegionParseError
from src.grid.regions import (
    CellComplex,
    SquareRegion,
    TriRegion,
    parse_cell_complex,
    parse_square_region,
    parse_tri_region,
)

Region = TriRegion | SquareRegion | CellComplex

_PARSERS = {
    TRI_EXTENSION: parse_tri_region,
    SQUARE_EXTENSION: parse_square_region,
    CELLS_EXTENSION: parse_cell_complex,
}


def _validate_extension(path: Path) -> str:
    """Return the region encoding for a path or raise."""
    suffix = path.suffix.lower()
    if suffix not in REGION_EXTENSIONS:
        raise RegionParseError(
            f"Unsupported region file {path.name!r}; expected one of {list(REGION_EXTENSIONS)}"
        )
    return suffix


@lru_cache(maxsize=32)
def _load_region(region_path: str) -> Region:
    """Parse a region file once per path."""
    path = Path(region_path)
    suffix = _validate_extension(path)
    return _PARSERS[suffix](path.read_text(encoding="utf-8"))


def get_region(region_path: str | Path) -> Region:
    """Return the cached region parsed from a .vax, .xreg or .cells file."""
    return _load_region(str(Path(region_path).resolve()))
