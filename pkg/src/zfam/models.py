"""Request and response schemas shared by the HTTP service and the CLI.

Every response carries ``schema: 1`` so consumers can detect layout changes.
Exact rationals travel as ``p/q`` strings next to a 12-significant-digit
decimal convenience field; integers stay integers so nothing is lost to
binary floats.  Groups enter either as a ``Z2^k`` token or as an inline
multiplication table (the CLI reads table files locally and inlines them,
the service never touches the server's filesystem).
"""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

# Inline table: row-major, table[g][h] = g*h, element 0 the identity.
GroupInput = Union[str, list[list[int]]]


class ZfamModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


class Envelope(ZfamModel):
    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")


# ---------------------------------------------------------------- requests


class EnumerateRequest(ZfamModel):
    """List spherical systems of one type on one group."""

    group: GroupInput
    tau: str
    mode: Literal["ordered", "multiset"] = "ordered"
    budget: int | None = Field(default=None, gt=0)
    max_systems: int | None = Field(default=None, ge=1)


class ComponentsRequest(ZfamModel):
    """Count moduli components for an unordered (or ordered) pair of types."""

    group: GroupInput
    tau1: str
    tau2: str
    budget: int | None = Field(default=None, gt=0)
    workers: int = Field(default=1, ge=1, le=64)
    count_ordered_pairs: bool = False
    identify_inner: bool = False
    include_keys: bool = False


class InvariantsRequest(ZfamModel):
    """Branch-curve combinatorics from K^2 and the topological Euler number."""

    ksq: int = Field(ge=1)
    c2: int
    m: int = Field(default=2, ge=2)


class FamilyRequest(ZfamModel):
    """Full multiplet report for one family member (k, l)."""

    k: int = Field(ge=2, le=16)
    l: int = Field(ge=5, le=64)
    epsilon: str | int | None = None
    budget: int | None = Field(default=None, gt=0)
    workers: int = Field(default=1, ge=1, le=64)


class ReportRequest(ZfamModel):
    """Batch of multiplet reports over a (k, l) rectangle; l <= 2k rows skip."""

    k_min: int = Field(ge=2, le=16)
    k_max: int = Field(ge=2, le=16)
    l_min: int = Field(ge=5, le=64)
    l_max: int = Field(ge=5, le=64)
    epsilon: str | int | None = None
    budget: int | None = Field(default=None, gt=0)
    workers: int = Field(default=1, ge=1, le=64)


# --------------------------------------------------------------- responses


class EnumerateResponse(Envelope):
    group: str
    tau: str
    mode: Literal["ordered", "multiset"]
    complete: bool
    count: int
    truncated: bool
    systems: list[list[int]]
    detail: str | None = None


class ConventionInfo(ZfamModel):
    swap_identified: bool
    inner_identified: bool
    count_ordered_pairs: bool


class ComponentsResponse(Envelope):
    group: str
    tau1: str
    tau2: str
    h: int | None
    completeness: Literal["exact", "budget-limited"]
    convention: ConventionInfo
    keys: list[str] | None = None
    detail: str | None = None


class ChisiniInfo(ZfamModel):
    threshold: str
    threshold_decimal: float
    ok: bool


class MainTheoremInfo(ZfamModel):
    n_d: int
    c_d: int


class InvariantsResponse(Envelope):
    ksq: int
    c2: int
    m: int
    nu: int
    d: int
    n: int
    c: int
    g: int
    euler_r: int
    chisini: ChisiniInfo
    main_theorem: MainTheoremInfo | None = None


class ParamsInfo(ZfamModel):
    k: int
    l: int
    r1: int
    r2: int
    tau1: str
    tau2: str
    chi: int
    epsilon: str
    epsilon_decimal: float
    g1: int
    g2: int


class SurfaceInfo(ZfamModel):
    chi: int
    e: int
    ksq: int
    g1: int
    g2: int
    q: int
    order: int


class CurveInfo(ZfamModel):
    m: int
    nu: int
    d: int
    n: int
    c: int
    g: int
    euler_r: int


class BoundsInfo(ZfamModel):
    d: int
    n_d: int
    c_d: int
    log2_lower_thm_main: int | float
    log2_lower_eq15: int | float
    log2_upper_catanese: int | float


class WitnessSideInfo(ZfamModel):
    support: list[int]
    multiplicities: list[int]


class FamilyRow(ZfamModel):
    k: int
    l: int
    params: ParamsInfo
    h: int | None
    completeness: Literal["exact", "budget-limited", "formula-only"]
    invariants: SurfaceInfo
    curve: CurveInfo
    bounds: BoundsInfo
    chisini: ChisiniInfo
    plurigenus: int
    witness_status: Literal["found", "none exists", "search budget exhausted", "not attempted"]
    witness: list[WitnessSideInfo] | None
    assumptions: list[str]


class FamilyResponse(Envelope):
    report: FamilyRow


class ReportResponse(Envelope):
    reports: list[FamilyRow]


class HealthResponse(Envelope):
    status: str = "ok"
    version: str


class ErrorResponse(Envelope):
    error: str
