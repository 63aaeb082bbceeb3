"""Request and response models for the classification service."""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class WeightRequest(BaseModel):
    weight: str = Field(..., description="weight literal, e.g. (1,0,0,0,0,-1,-2)")


class OrbitRequest(BaseModel):
    weight: str
    cap: Optional[int] = Field(None, ge=1, description="vertex cap; env default")


class ArrowRequest(BaseModel):
    weight: str
    label: int = Field(..., ge=1)


class JHRequest(BaseModel):
    n: int = Field(..., ge=2)
    c: str = Field(..., description="scalar literal, e.g. 2 or c")
    k: Optional[int] = Field(None, ge=0, description="row index; all rows if absent")


class FockCheckRequest(BaseModel):
    n: int = Field(3, ge=2, le=5)
    checks: Optional[List[str]] = None
    samples: int = Field(40, ge=1, le=500)
    window: int = Field(6, ge=1, le=12)
    seed: int = 0


class CuspidalRequest(BaseModel):
    weight: str
    twists: List[str] = Field(..., description="n-1 scalar literals")


class SelftestRequest(BaseModel):
    criteria: Optional[List[int]] = None


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody


class VerdictResponse(BaseModel):
    verdict: Literal["finite_dimensional", "bounded", "unbounded"]
    weight: str
    klass: Optional[str] = None
    type: Optional[str] = None
    maximal: Optional[str] = None
    word: List[int] = []
    regularity: Optional[int] = None
    reason: Optional[str] = None
    family_id: Optional[str] = None


class OrbitEdge(BaseModel):
    source: str
    label: int
    target: str
    relation: Literal["lt", "eq", "gt", "incomparable"]


class OrbitResponse(BaseModel):
    vertices: List[str]
    edges: List[OrbitEdge]
    truncated: bool
    maximal_vertices: List[str]


class BoundedEntryOut(BaseModel):
    weight: str
    type: str
    word: List[int]


class EnumerateResponse(BaseModel):
    maximal: str
    count: int
    entries: List[BoundedEntryOut]


class FamilyMemberOut(BaseModel):
    type: str
    word: List[int]
    weight: str


class FamilyArrowOut(BaseModel):
    source: str
    label: int
    target: str
    bidirectional: bool


class FamilyOut(BaseModel):
    family_id: str
    kind: str
    anchor: str
    regularities: List[int]
    members: List[FamilyMemberOut]
    arrows: List[FamilyArrowOut]


class FamiliesResponse(BaseModel):
    families: List[FamilyOut]


class DegreeResponse(BaseModel):
    weight: str
    degree: int


class JHEntryOut(BaseModel):
    weight: str
    multiplicity: int


class JHRowOut(BaseModel):
    k: int
    module: str
    entries: List[JHEntryOut]


class JHResponse(BaseModel):
    n: int
    c: str
    rows: List[JHRowOut]


class FockReport(BaseModel):
    check: str
    status: Literal["pass", "fail"]
    detail: str = ""
    witnesses: List[str] = []


class FockCheckResponse(BaseModel):
    n: int
    reports: List[FockReport]
    passed: bool


class CuspidalResponse(BaseModel):
    weight: str
    twists: List[str]
    anchor: str


class SelftestResult(BaseModel):
    criterion: int
    title: str
    status: Literal["pass", "fail"]
    detail: str = ""
    seconds: float


class SelftestResponse(BaseModel):
    results: List[SelftestResult]
    passed: bool
