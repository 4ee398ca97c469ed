"""Request and response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from pydantic import BaseModel, Field


class TheoremTableRequest(BaseModel):
    jmax: int = Field(ge=1)
    schedule: str = "mrrw1"
    mixed_switch: int = Field(default=5, ge=3)


class TableRow(BaseModel):
    j: int
    lower: float
    lower_display: str
    upper: float
    upper_display: str


class TheoremTableResponse(BaseModel):
    schedule: str
    direction: str
    rows: list[TableRow]


class BoundsEvalRequest(BaseModel):
    kind: str
    delta: float


class BoundsEvalResponse(BaseModel):
    kind: str
    delta: float
    value: float


class SolveRequest(BaseModel):
    p: float
    kind: str


class SolveResponse(BaseModel):
    kind: str
    p: float
    increment: float
    total: float
    total_display: str
    residual: float


class HeuristicRequest(BaseModel):
    jmax: int = Field(ge=1)


class HeuristicRow(BaseModel):
    j: int
    increment: float
    cumulative: float
    display: str


class HeuristicResponse(BaseModel):
    schedule: str
    rows: list[HeuristicRow]


class AsymptoticRequest(BaseModel):
    jmax: int = Field(ge=10)


class AsymptoticDecade(BaseModel):
    j: int
    increment: float
    cumulative: float
    growth_ratio: float
    increment_ratio: float


class AsymptoticResponse(BaseModel):
    j_max: int
    max_increment: float
    decades: list[AsymptoticDecade]


class ExactDavenportRequest(BaseModel):
    rank: int = Field(ge=1)
    j: int = Field(ge=1)


class ExactDavenportResponse(BaseModel):
    r: int
    j: int
    value: int
    witness: list[int]


class ExactSconstRequest(BaseModel):
    rank: int = Field(ge=1)
    d: int = Field(ge=2)


class ExactSconstResponse(BaseModel):
    r: int
    d: int
    value: int
    witness: list[int]


class ExactDecomposeRequest(BaseModel):
    rank: int = Field(ge=1)
    elements: list[int]


class ExactDecomposeResponse(BaseModel):
    r: int
    elements: list[int]
    max_disjoint: int
    witness: list[list[int]]


class CountingRatioRequest(BaseModel):
    n: int
    rank: int = Field(ge=1)
    j: int = Field(ge=1)
    mode: str = "auto"


class RatioParts(BaseModel):
    numerator: str
    denominator: str


class CountingRatioResponse(BaseModel):
    n: int
    r: int
    j: int
    mode: str
    exact_ratio: RatioParts | None
    log2_value: float
    crude_log2: float
    admissible_guaranteed: bool


class CountingLowerRequest(BaseModel):
    rank: int = Field(ge=1)
    j: int = Field(ge=1)
    mode: str = "auto"


class CountingLowerResponse(BaseModel):
    r: int
    j: int
    value: int
    coefficient: float


class CorollaryRequest(BaseModel):
    rank: int = Field(ge=1)
    n: int = Field(ge=1)
    schedule: str = "mrrw1"
    mixed_switch: int = Field(default=5, ge=3)


class CorollaryResponse(BaseModel):
    r: int
    n: int
    schedule: str
    coefficient: float
    value: float
    asymptotic_in_r: bool


class VerifyPcmRequest(BaseModel):
    trials: int = Field(ge=1)
    seed: int = 0
    max_rank: int = Field(default=6, ge=1)
    max_len: int = Field(default=12, ge=1)
    threads: int | None = Field(default=None, ge=1)


class VerifyFailure(BaseModel):
    trial: int
    r: int
    n: int
    min_distance: int | None
    min_zero_sum: int | None
    rows: list[str]


class VerifyPcmResponse(BaseModel):
    trials: int
    seed: int
    max_rank: int
    max_len: int
    threads: int
    mismatches: int
    failures: list[VerifyFailure]


class HealthResponse(BaseModel):
    status: str
    version: str
