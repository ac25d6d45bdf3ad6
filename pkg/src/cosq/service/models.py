"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class FamilyRequest(BaseModel):
    type: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    s: int | None = None
    timing: bool = False


class Co2Request(BaseModel):
    hypergraph: str
    ell: int | None = None
    timing: bool = False


class CheckRequest(BaseModel):
    hypergraph: str
    prop: str
    t: int | None = None
    d: int | None = None
    s: int | None = None
    pattern: str | None = None
    timing: bool = False


class BoundRequest(BaseModel):
    kind: str
    n: int | None = None
    k: int | None = None
    ell: int | None = None
    m: int | None = None
    t: int | None = None
    s: int | None = None
    pi: str | None = None  # rational like "3/4"
    hypergraph: str | None = None
    timing: bool = False


class ConstraintModel(BaseModel):
    kind: str  # t-intersecting | d-wise | matching-at-most | pattern-free
    t: int | None = None
    d: int | None = None
    s: int | None = None
    pattern: str | None = None


class SearchRequest(BaseModel):
    n: int
    k: int
    constraints: list[ConstraintModel] = Field(default_factory=list)
    mode: str = "branch-and-bound"
    node_budget: int = 10**9
    time_budget_s: float | None = None
    workers: int = 1
    optima_cap: int = 64
    require_nontrivial: int | None = None
    allow_large: bool = False
    timing: bool = False


class VerifyRequest(BaseModel):
    claim: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    s: int | None = None
    search: bool = False
    tol: str | None = None  # rational like "3/20"
    node_budget: int = 10**9
    time_budget_s: float | None = None
    workers: int = 1
    timing: bool = False


class ReportEnvelope(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_: str = Field(alias="schema")
    command: str
    inputs: dict
    outputs: dict
    status: str
    workers: str
    timing: str | None = None
