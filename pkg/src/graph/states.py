"""LangGraph state schema for the count pipeline."""

from __future__ import annotations

from typing import Any, TypedDict

from pydantic import BaseModel, ConfigDict, Field


class PipelineStateDict(TypedDict, total=False):
    """Mapping-based state shape for LangGraph runtime."""

    region_path: str | None
    family: str | None
    params: dict[str, int]
    method: str | None
    factored: bool
    instance: Any
    plane: Any
    engine: str | None
    count: Any
    factorization: Any
    seconds: float
    error_type: str | None
    error_message: str | None
    exception: Any


class PipelineState(BaseModel):
    """Strict shared state for pipeline node execution."""

    model_config = ConfigDict(extra="forbid", validate_assignment=True, arbitrary_types_allowed=True)

    region_path: str | None = Field(default=None, description="Region file to load.")
    family: str | None = Field(default=None, description="Registered family name.")
    params: dict[str, int] = Field(default_factory=dict, description="Family parameters.")
    method: str | None = Field(default=None, description="Forced engine, None for auto.")
    factored: bool = Field(default=False, description="Whether to factor the count.")
    instance: Any = Field(default=None, description="Parsed region or prebuilt graph.")
    plane: Any = Field(default=None, description="Dual PlaneGraph.")
    engine: str | None = Field(default=None, description="Engine that produced the count.")
    count: Any = Field(default=None, description="Exact count (int) or weighted sum (Fraction).")
    factorization: Any = Field(default=None, description="FactoredCount when requested.")
    seconds: float = Field(default=0.0, description="Wall time spent counting.")
    error_type: str | None = Field(
        default=None, description="Exception class name set by a failing node."
    )
    error_message: str | None = Field(default=None, description="Diagnostic for the failure.")
    exception: Any = Field(default=None, description="Original exception, re-raised by callers.")


def build_initial_state(
    *,
    region_path: str | None = None,
    family: str | None = None,
    params: dict[str, int] | None = None,
    method: str | None = None,
    factored: bool = False,
    instance: Any = None,
) -> PipelineState:
    """Create a default pipeline state for one instance."""
    return PipelineState(
        region_path=region_path,
        family=family,
        params=params or {},
        method=method,
        factored=factored,
        instance=instance,
    )


def to_state_dict(state: PipelineState) -> dict[str, Any]:
    """Convert model to a plain dict without deep-copying graph objects."""
    return dict(state)


def build_initial_state_dict(**kwargs: Any) -> PipelineStateDict:
    """Create initial mapping-based state for graph invocation."""
    return to_state_dict(build_initial_state(**kwargs))
