"""LangGraph flow wiring for the count pipeline."""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Literal

from langgraph.graph import END, START, StateGraph

from src.graph.nodes import (
    ENGINE_NODES,
    brute_node,
    build_dual_node,
    det_node,
    factor_node,
    finalize_node,
    load_region_node,
    permanent_node,
    pfaffian_node,
    select_engine_node,
)
from src.graph.states import PipelineState, PipelineStateDict, build_initial_state_dict

SharedRoute = Literal["continue", "finalize"]
EngineRoute = Literal["det", "pfaffian", "permanent", "brute", "finalize"]
CountRoute = Literal["factor", "finalize"]


def _shared_route_decision(state: PipelineStateDict) -> SharedRoute:
    """Shared routing decision: finalize on error, else continue."""
    if state.get("error_type"):
        return "finalize"
    return "continue"


def _route_after_load(state: PipelineStateDict) -> SharedRoute:
    return _shared_route_decision(state)


def _route_after_dual(state: PipelineStateDict) -> SharedRoute:
    return _shared_route_decision(state)


def _route_after_select(state: PipelineStateDict) -> EngineRoute:
    """Dispatch to the selected engine node."""
    if _shared_route_decision(state) == "finalize":
        return "finalize"
    return state["engine"]  # type: ignore[return-value]


def _route_after_count(state: PipelineStateDict) -> CountRoute:
    """Factor only when requested and the count succeeded."""
    if _shared_route_decision(state) == "finalize" or not state.get("factored"):
        return "finalize"
    return "factor"


def build_graph():
    """Build and compile the LangGraph workflow."""
    graph = StateGraph(PipelineStateDict)

    graph.add_node("load_region_node", load_region_node)
    graph.add_node("build_dual_node", build_dual_node)
    graph.add_node("select_engine_node", select_engine_node)
    graph.add_node("det_node", det_node)
    graph.add_node("pfaffian_node", pfaffian_node)
    graph.add_node("permanent_node", permanent_node)
    graph.add_node("brute_node", brute_node)
    graph.add_node("factor_node", factor_node)
    graph.add_node("finalize_node", finalize_node)

    graph.add_edge(START, "load_region_node")
    graph.add_conditional_edges(
        "load_region_node",
        _route_after_load,
        {"continue": "build_dual_node", "finalize": "finalize_node"},
    )
    graph.add_conditional_edges(
        "build_dual_node",
        _route_after_dual,
        {"continue": "select_engine_node", "finalize": "finalize_node"},
    )
    graph.add_conditional_edges(
        "select_engine_node",
        _route_after_select,
        {**ENGINE_NODES, "finalize": "finalize_node"},
    )
    for node in ENGINE_NODES.values():
        graph.add_conditional_edges(
            node,
            _route_after_count,
            {"factor": "factor_node", "finalize": "finalize_node"},
        )
    graph.add_edge("factor_node", "finalize_node")
    graph.add_edge("finalize_node", END)

    return graph.compile()


@lru_cache(maxsize=1)
def get_graph():
    """Compiled pipeline, built once per process."""
    return build_graph()


def run_pipeline(**kwargs: Any) -> dict[str, Any]:
    """Invoke the pipeline and return the final state, failures included."""
    return get_graph().invoke(build_initial_state_dict(**kwargs))


def run_count(**kwargs: Any) -> PipelineState:
    """Invoke the pipeline and re-raise the first node failure."""
    final = run_pipeline(**kwargs)
    if final.get("exception") is not None:
        raise final["exception"]
    return PipelineState(**{key: value for key, value in final.items() if key in PipelineState.model_fields})
