"""Engine selection and applicability policies."""

from __future__ import annotations

from config.constants import (
    ENGINE_BRUTE,
    ENGINE_DET,
    ENGINE_PERMANENT,
    ENGINE_PFAFFIAN,
    MSG_NO_EMBEDDING,
    MSG_NOT_BIPARTITE,
    MSG_NOT_PLANAR,
)
from src.contracts.errors import EngineError

# Preference order used by auto-selection; first applicable engine wins.
ENGINE_PREFERENCE: tuple[str, ...] = (
    ENGINE_DET,
    ENGINE_PFAFFIAN,
    ENGINE_PERMANENT,
    ENGINE_BRUTE,
)

# (needs planar embedding, needs bipartition) per engine.
ENGINE_REQUIREMENTS: dict[str, tuple[bool, bool]] = {
    ENGINE_DET: (True, True),
    ENGINE_PFAFFIAN: (True, False),
    ENGINE_PERMANENT: (False, True),
    ENGINE_BRUTE: (False, False),
}


def engine_applies(engine: str, *, planar: bool, bipartite: bool) -> bool:
    """Whether a graph class satisfies an engine's requirements."""
    needs_planar, needs_bipartite = ENGINE_REQUIREMENTS[engine]
    return (planar or not needs_planar) and (bipartite or not needs_bipartite)


def select_engine(*, planar: bool, bipartite: bool) -> str:
    """Planar bipartite -> det; planar -> pfaffian; bipartite -> permanent; else brute."""
    for engine in ENGINE_PREFERENCE:
        if engine_applies(engine, planar=planar, bipartite=bipartite):
            return engine
    return ENGINE_BRUTE


def require_engine(engine: str, *, planar: bool, bipartite: bool) -> None:
    """Raise EngineError when a forced engine cannot handle the graph."""
    needs_planar, needs_bipartite = ENGINE_REQUIREMENTS[engine]
    if needs_bipartite and not bipartite:
        raise EngineError(MSG_NOT_BIPARTITE)
    if needs_planar and not planar:
        raise EngineError(MSG_NOT_PLANAR if engine == ENGINE_DET else MSG_NO_EMBEDDING)
