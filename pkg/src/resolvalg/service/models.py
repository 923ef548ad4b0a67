"""Request and response schemas for the service.

Expressions, vectors and scalars travel as DSL strings ("R(1,p1)*R(2,p1)",
"p1+q2", "-1/2*i") so that exact rationals survive the JSON boundary.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class ConfigModel(BaseModel):
    """Optional overrides of the run configuration."""

    schedule: Optional[list[int]] = None
    K0: Optional[int] = None
    tol_in: Optional[float] = None
    tol_out: Optional[float] = None
    budget: Optional[int] = None
    degree_cap: Optional[int] = None

    def overrides(self) -> dict:
        out: dict[str, Any] = {}
        if self.schedule is not None:
            out["schedule"] = tuple(self.schedule)
        if self.K0 is not None:
            out["k0"] = self.K0
        for key in ("tol_in", "tol_out", "budget", "degree_cap"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


class Report(BaseModel):
    check: str
    law: str
    status: str
    residuals: list[float]
    params: dict[str, Any]


class Summary(BaseModel):
    checks: int
    passed: int = Field(alias="pass")
    fail: int
    inconclusive: int
    exit_code: int

    model_config = {"populate_by_name": True}


class ReportsResponse(BaseModel):
    reports: list[Report]
    summary: Summary


class LabelSpec(BaseModel):
    """A label: spanning vectors of the regular subspace plus functional
    values on the canonical basis of its radical."""

    vectors: list[str]
    phi: list[str] = []


class SimplifyRequest(BaseModel):
    expr: str
    dim: Optional[int] = None
    budget: int = 400
    degree_cap: int = 6


class SimplifyResponse(BaseModel):
    text: str
    term: list[dict]
    complete: bool
    steps: int
    capped: bool


class RelationsRequest(BaseModel):
    dim: int = 2
    seed: int = 0
    instances: int = 20
    schedule: Optional[list[int]] = None
    config: Optional[ConfigModel] = None


class LabelBuildRequest(BaseModel):
    dim: int
    label: LabelSpec


class LabelBuildResponse(BaseModel):
    ambient: int
    subspace: list[list[str]]
    radical: list[list[str]]
    phi: list[str]
    character_values: dict[str, str]


class LabelExtractRequest(BaseModel):
    dim: int
    label: LabelSpec
    probes: Optional[list[str]] = None
    schedule: Optional[list[int]] = None
    config: Optional[ConfigModel] = None


class LabelExtractResponse(BaseModel):
    subspace: list[list[str]]
    radical: list[list[str]]
    phi: list[float]
    probe_tags: list[str]
    inconclusive: list[int]


class RoundtripRequest(BaseModel):
    dim: int
    label: LabelSpec
    probes: Optional[list[str]] = None
    tolerance: float = 1e-6
    config: Optional[ConfigModel] = None


class ChainRequest(BaseModel):
    dims: list[int] = [2, 4, 6]
    exhaustive_dims: list[int] = [2, 4]
    config: Optional[ConfigModel] = None


class MembershipRequest(BaseModel):
    dim: int
    label: LabelSpec
    expr: str
    schedule: Optional[list[int]] = None
    config: Optional[ConfigModel] = None


class VerdictModel(BaseModel):
    status: str
    residuals: list[float]
    levels: list[int]
    witness: str


class MembershipResponse(BaseModel):
    verdict: VerdictModel


class SpectralPointModel(BaseModel):
    lam: str
    vector: str
    rho: str = "0"


class IntersectionRequest(BaseModel):
    dim: int = 2
    specs: Optional[list[SpectralPointModel]] = None
    seed: int = 0
    cases: int = 5
    config: Optional[ConfigModel] = None


class MaximalRequest(BaseModel):
    dim: int
    support: list[str] = []
    phi: list[str] = []
    expr: str


class MaximalResponse(BaseModel):
    member: bool


class CommutatorRequest(BaseModel):
    dim: int = 2
    seed: int = 0
    samples: int = 8
    config: Optional[ConfigModel] = None


class ReportAllRequest(BaseModel):
    dim: int = 2
    seed: int = 0
    config: Optional[ConfigModel] = None


class HealthResponse(BaseModel):
    status: str
    version: str
