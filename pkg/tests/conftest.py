from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.contracts.models import AztecSpec, HexagonSpec
from src.families.aztec import aztec
from src.families.hexagons import hexagon
from src.grid.dual import dual_graph
from src.grid.plane import PlaneGraph

@pytest.fixture
def hexagon_plane() -> Callable[..., PlaneGraph]:
    def build(a: int, b: int | None = None, c: int | None = None) -> PlaneGraph:
        spec = HexagonSpec(a=a, b=a if b is None else b, c=a if c is None else c)
        return dual_graph(hexagon(spec))

    return build


@pytest.fixture
def diamond_plane() -> Callable[[int], PlaneGraph]:
    def build(n: int) -> PlaneGraph:
        return dual_graph(aztec(AztecSpec(kind="DIAMOND", n=n)))

    return build


@pytest.fixture
def region_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
