"""Pydantic request/response models for the qroute service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class BreakdownEntry(BaseModel):
    label: str
    cnots: int


class HashCostRequest(BaseModel):
    device: str | None = None
    l: int = Field(ge=1)
    naive: bool = False
    edge_list: str | None = None  # custom topology file content


class HashCostResponse(BaseModel):
    device: str
    l: int
    total_cnots: int
    breakdown: list[BreakdownEntry]
    formula_cnots: int | None
    match: bool | None
    baseline_cnots: int | None = None
    ratio: float | None = None


class HashSimRequest(BaseModel):
    p: int
    m: int = Field(ge=2)
    l: int = Field(ge=0)
    seed: int = 0
    budget: int = Field(default=10_000, ge=1)


class HashSimResponse(BaseModel):
    p: int
    m: int
    l: int
    seed: int
    budget: int
    xi: list[float]
    eps: float
    accept_simulated: float
    accept_formula: float
    diff: float
    member_l: int
    member_accept_simulated: float
    member_accept_formula: float


class SweepRequest(BaseModel):
    device: str
    l_max: int = Field(ge=1)


class SweepRow(BaseModel):
    l: int
    optimized: int
    naive: int
    formula: int


class SweepResponse(BaseModel):
    device: str
    rows: list[SweepRow]


class QftRequest(BaseModel):
    device: str | None = None
    n: int | None = None
    edge_list: str | None = None
    start: int = 0
    verify: bool = False


class QftResponse(BaseModel):
    device: str
    n: int
    total_cnots: int
    breakdown: list[BreakdownEntry]
    diagnostics: list[str]
    structural: str  # PASS / FAIL / SKIPPED
    unitary: str  # PASS / FAIL / SKIPPED
    final_positions: list[int]


class AnglesRequest(BaseModel):
    p: int
    m: int = Field(ge=2)
    budget: int = Field(default=10_000, ge=1)
    seed: int = 0


class AnglesResponse(BaseModel):
    p: int
    m: int
    seed: int
    budget: int
    xi: list[float]
    eps: float


class TopologyValidateRequest(BaseModel):
    device: str | None = None
    edge_list: str | None = None
    derive_start: int | None = None


class TopologyValidateResponse(BaseModel):
    valid: bool
    violations: list[str]
    n: int | None = None
    chain: list[int] | None = None
    stationary: list[list[int]] | None = None


class ExportRequest(BaseModel):
    kind: str  # hash-routed | hash-logical | qft | qft-reference
    device: str | None = None
    n: int | None = None
    l: int = 1
    p: int = 5
    m: int | None = None
    seed: int = 0
    logical: bool = False


class ExportResponse(BaseModel):
    qasm: str
    cnot_count: int
    width: int
