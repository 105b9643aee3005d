"""Graph nodes for loading, dualizing, counting and factoring one instance."""

from __future__ import annotations

import time
from typing import Any, Callable

from config.constants import ENGINE_BRUTE, ENGINE_DET, ENGINE_PERMANENT, ENGINE_PFAFFIAN
from src.analysis.factoring import factorize
from src.contracts.errors import MatchworkError
from src.contracts.policies import require_engine, select_engine
from src.data.repository import get_region
from src.families.registry import build_family
from src.grid.dual import dual_graph
from src.grid.plane import PlaneGraph
from src.kasteleyn.engines import (
    Count,
    brute_force_count,
    count_det,
    pfaffian_count,
    permanent_ryser,
)
from src.kasteleyn.orientation import sign_assignment
from src.utils.logging import log_event


def _ensure_state(state: dict[str, Any]) -> dict[str, Any]:
    """Ensure mutable dict with required keys exists."""
    state.setdefault("params", {})
    state.setdefault("factored", False)
    state.setdefault("seconds", 0.0)
    state.setdefault("error_type", None)
    state.setdefault("error_message", None)
    state.setdefault("exception", None)
    return state


def _record_failure(state: dict[str, Any], node: str, exc: Exception) -> dict[str, Any]:
    """Store the failure so routing short-circuits to finalize."""
    log_event(f"{node}_failed", error=str(exc), error_type=type(exc).__name__)
    state["error_type"] = type(exc).__name__
    state["error_message"] = str(exc)
    state["exception"] = exc
    return state


def load_region_node(state: dict[str, Any]) -> dict[str, Any]:
    """Resolve the instance from a region file or a family name."""
    state = _ensure_state(state)
    if state.get("instance") is not None:
        return state
    try:
        if state.get("region_path"):
            state["instance"] = get_region(state["region_path"])
        elif state.get("family"):
            state["instance"] = build_family(state["family"], state["params"])
        else:
            raise MatchworkError("no region source: give a file or a family")
        log_event(
            "region_loaded",
            source=state.get("region_path") or state.get("family"),
            kind=type(state["instance"]).__name__,
        )
    except Exception as exc:
        return _record_failure(state, "load_region", exc)
    return state


def build_dual_node(state: dict[str, Any]) -> dict[str, Any]:
    """Turn the region into its dual graph; prebuilt graphs pass through."""
    state = _ensure_state(state)
    instance = state.get("instance")
    try:
        state["plane"] = instance if isinstance(instance, PlaneGraph) else dual_graph(instance)
    except Exception as exc:
        return _record_failure(state, "build_dual", exc)
    return state


def select_engine_node(state: dict[str, Any]) -> dict[str, Any]:
    """Apply the forced method or pick the cheapest applicable engine."""
    state = _ensure_state(state)
    plane: PlaneGraph = state["plane"]
    try:
        method = state.get("method")
        engine = method or select_engine(planar=plane.planar, bipartite=plane.bipartite)
        require_engine(engine, planar=plane.planar, bipartite=plane.bipartite)
        state["engine"] = engine
        log_event("engine_selected", engine=engine, forced=method is not None)
    except Exception as exc:
        return _record_failure(state, "select_engine", exc)
    return state


def _run_engine(state: dict[str, Any], node: str, engine: Callable[[PlaneGraph], Count]) -> dict[str, Any]:
    """Time one engine call and store its count."""
    state = _ensure_state(state)
    started = time.perf_counter()
    try:
        state["count"] = engine(state["plane"])
    except Exception as exc:
        return _record_failure(state, node, exc)
    state["seconds"] = time.perf_counter() - started
    log_event("count_completed", engine=state.get("engine"), count=state["count"], seconds=state["seconds"])
    return state


def det_node(state: dict[str, Any]) -> dict[str, Any]:
    """Kasteleyn determinant of the signed biadjacency matrix."""
    return _run_engine(
        state,
        "det",
        lambda plane: count_det(sign_assignment(plane)) if plane.balanced else 0,
    )


def pfaffian_node(state: dict[str, Any]) -> dict[str, Any]:
    return _run_engine(state, "pfaffian", pfaffian_count)


def permanent_node(state: dict[str, Any]) -> dict[str, Any]:
    return _run_engine(state, "permanent", permanent_ryser)


def brute_node(state: dict[str, Any]) -> dict[str, Any]:
    return _run_engine(
        state,
        "brute",
        lambda plane: brute_force_count(plane, weighted=plane.weighted),
    )


def factor_node(state: dict[str, Any]) -> dict[str, Any]:
    """Factor a positive integral count."""
    state = _ensure_state(state)
    count = state.get("count")
    if not isinstance(count, int) or count < 1:
        log_event("factor_skipped", count=count)
        return state
    try:
        state["factorization"] = factorize(count)
    except Exception as exc:
        return _record_failure(state, "factor", exc)
    return state


def finalize_node(state: dict[str, Any]) -> dict[str, Any]:
    """Final logging hook."""
    state = _ensure_state(state)
    log_event(
        "pipeline_finished",
        engine=state.get("engine"),
        count=state.get("count"),
        error_type=state.get("error_type"),
    )
    return state


ENGINE_NODES: dict[str, str] = {
    ENGINE_DET: "det_node",
    ENGINE_PFAFFIAN: "pfaffian_node",
    ENGINE_PERMANENT: "permanent_node",
    ENGINE_BRUTE: "brute_node",
}
