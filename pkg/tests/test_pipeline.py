from __future__ import annotations

from fractions import Fraction

import pytest

from src.contracts.errors import EngineError, RegionParseError, UnknownFamilyError
from src.families.graphs import cube_graph
from src.graph.flow import _route_after_count, _route_after_select, run_count, run_pipeline
from src.graph.states import PipelineStateDict, build_initial_state_dict


def test_family_count_with_auto_engine():
    state = run_count(family="hexagon", params={"n": 2})
    assert state.count == 20
    assert state.engine == "det"
    assert state.error_type is None
    assert state.seconds >= 0


@pytest.mark.parametrize("method", ["det", "pfaffian", "permanent", "brute"])
def test_forced_method(method):
    state = run_count(family="aztec-diamond", params={"n": 3}, method=method)
    assert state.engine == method
    assert state.count == 64


def test_region_file_count(region_file):
    state = run_count(region_path=str(region_file("hex.vax", "AVA\nVAV\n")))
    assert state.count == 2


def test_weighted_complex_count(region_file):
    path = region_file(
        "square.cells",
        "cell a\ncell b\ncell c\ncell d\nedge a b 1/2\nedge b c\nedge c d\nedge d a\nface 1 2 3 4\n",
    )
    assert run_count(region_path=str(path)).count == Fraction(3, 2)
    assert run_count(region_path=str(path), method="brute").count == Fraction(3, 2)


def test_prebuilt_graph_instance():
    state = run_count(instance=cube_graph(3))
    assert state.engine == "permanent"
    assert state.count == 9


def test_factor_node_runs_when_requested():
    state = run_count(family="intruded-square", params={"n": 2}, factored=True)
    assert state.count == 18
    assert state.factorization.factors == ((2, 1), (3, 2))
    assert state.factorization.structure == "POW2_TIMES_ODD_SQUARE"


def test_factor_skipped_for_zero_count():
    state = run_count(family="triangle-graph", params={"n": 5}, factored=True)
    assert state.count == 0
    assert state.factorization is None


def test_failures_route_to_finalize():
    final = run_pipeline(family="cube", params={"n": 3}, method="det")
    assert final["error_type"] == "EngineError"
    assert final.get("count") is None
    assert "bipartite" in final["error_message"] or "planar" in final["error_message"]


@pytest.mark.parametrize(
    ("kwargs", "error"),
    [
        ({"family": "cube", "params": {"n": 3}, "method": "pfaffian"}, EngineError),
        ({"family": "no-such-family"}, UnknownFamilyError),
        ({"region_path": "region.txt"}, RegionParseError),
    ],
)
def test_run_count_reraises(kwargs, error):
    with pytest.raises(error):
        run_count(**kwargs)


def test_routing_helpers():
    state = build_initial_state_dict(family="hexagon")
    state["engine"] = "pfaffian"
    assert _route_after_select(state) == "pfaffian"
    assert _route_after_count(state) == "finalize"
    state["factored"] = True
    assert _route_after_count(state) == "factor"
    state["error_type"] = "EngineError"
    assert _route_after_select(state) == "finalize"
    assert _route_after_count(state) == "finalize"


def test_state_carries_no_unread_routing_keys():
    assert "routing_action" not in PipelineStateDict.__annotations__
    final = run_pipeline(family="cube", params={"n": 3}, method="det")
    assert "routing_action" not in final
    assert run_pipeline(family="hexagon", params={"n": 1}).get("routing_action") is None
