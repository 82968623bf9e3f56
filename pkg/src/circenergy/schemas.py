"""Request/response models shared by the HTTP service and the CLI.

Every response carries a top-level schema version so downstream
consumers can detect payload changes.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel

SCHEMA_VERSION = "1"


class EnergyRequest(BaseModel):
    kind: Literal["circulant", "toeplitz"] = "circulant"
    method: Literal["auto", "direct", "fft", "dense"] = "auto"
    n: int
    coefficients: list[float]
    include_spectrum: bool = False


class EnergyResponse(BaseModel):
    version: str = SCHEMA_VERSION
    kind: str
    method: str
    n: int
    b: int
    energy: float
    normalized: float
    eigenvalues: Optional[list[float]] = None


class ExpectedEnergyRequest(BaseModel):
    method: Literal["mc", "exact"] = "mc"
    n: int
    b: int
    dist: str = "bernoulli:0.5"
    trials: int = 1000
    seed: int = 0
    threads: int = 0


class EstimateResponse(BaseModel):
    version: str = SCHEMA_VERSION
    method: str
    n: int
    b: int
    dist: str
    trials: int
    seed: int
    estimate: float
    stderr: float
    raw_mean: float
    limit: float
    limit_gap: float


class BoundsRequest(BaseModel):
    theorem: Literal[1, 2, 3]
    n: int = 0
    b: int
    dist: str = "bernoulli:0.5"
    delta: float = 0.0
    support_bound: Optional[float] = None
    c1: Optional[float] = None


class BoundReportResponse(BaseModel):
    version: str = SCHEMA_VERSION
    theorem: str
    inputs: dict
    terms: dict[str, float]
    total: float


class DirichletRequest(BaseModel):
    b_lo: int = 1
    b_hi: int = 10
    tol: float = 1e-9


class KernelRow(BaseModel):
    b: int
    lebesgue: float
    lebesgue_bound: float
    total_variation: float
    tv_bound: float


class DirichletResponse(BaseModel):
    version: str = SCHEMA_VERSION
    rows: list[KernelRow]


class DeviationRequest(BaseModel):
    n: int
    b: int
    dist: str = "bernoulli:0.5"
    trials: int = 1000
    deltas: Optional[list[float]] = None
    seed: int = 0
    threads: int = 0


class TailPoint(BaseModel):
    delta: float
    empirical: float
    bound: float


class DeviationResponse(BaseModel):
    version: str = SCHEMA_VERSION
    n: int
    b: int
    dist: str
    trials: int
    seed: int
    delta0: float
    mean_normalized: float
    points: list[TailPoint]


class ConvergenceRequest(BaseModel):
    schedule: list[tuple[int, int]]
    dist: str = "bernoulli:0.5"
    trials: int = 200
    seed: int = 0
    threads: int = 0


class ConvergencePointModel(BaseModel):
    n: int
    b: int
    estimate: float
    stderr: float
    deviation: float
    bound: float


class ConvergenceResponse(BaseModel):
    version: str = SCHEMA_VERSION
    dist: str
    trials: int
    seed: int
    limit: float
    points: list[ConvergencePointModel]


class CompareRequest(BaseModel):
    p: float = 0.5
    d: int = 3
    sigma: float = 1.0
    n: Optional[int] = None


class CompareRow(BaseModel):
    ensemble: str
    normalizer: str
    constant: float
    constant_hi: Optional[float] = None


class CompareResponse(BaseModel):
    version: str = SCHEMA_VERSION
    rows: list[CompareRow]


class ToeplitzGapRequest(BaseModel):
    n: int
    b: int
    dist: str = "bernoulli:0.5"
    trials: int = 100
    seed: int = 0
    cap: int = 4096
    threads: int = 0


class ToeplitzGapResponse(BaseModel):
    version: str = SCHEMA_VERSION
    n: int
    b: int
    dist: str
    trials: int
    seed: int
    mean_normalized_gap: float
    max_corner_ratio: float
    thm3_exact: float
    thm3_coarse: float
