"""HTTP interface: one POST route per command, sharing the CLI's runner layer."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, runners
from .schemas import (
    BoundReportResponse,
    BoundsRequest,
    CompareRequest,
    CompareResponse,
    ConvergenceRequest,
    ConvergenceResponse,
    DeviationRequest,
    DeviationResponse,
    DirichletRequest,
    DirichletResponse,
    EnergyRequest,
    EnergyResponse,
    EstimateResponse,
    ExpectedEnergyRequest,
    ToeplitzGapRequest,
    ToeplitzGapResponse,
)
from .spectral import NumericalError

app = FastAPI(
    title="circenergy",
    version=__version__,
    description="Trace-norm energy of random band circulant and Toeplitz matrices",
)


@app.exception_handler(ValueError)
async def _bad_argument(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(NumericalError)
async def _numerical_failure(request: Request, exc: NumericalError):
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/v1/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/v1/energy", response_model=EnergyResponse, response_model_exclude_none=True)
def energy(req: EnergyRequest) -> EnergyResponse:
    return runners.run_energy(req)


@app.post("/v1/expected-energy", response_model=EstimateResponse)
def expected_energy(req: ExpectedEnergyRequest) -> EstimateResponse:
    return runners.run_expected_energy(req)


@app.post("/v1/bounds", response_model=BoundReportResponse)
def bound_report(req: BoundsRequest) -> BoundReportResponse:
    return runners.run_bounds(req)


@app.post("/v1/dirichlet", response_model=DirichletResponse)
def dirichlet_table(req: DirichletRequest) -> DirichletResponse:
    return runners.run_dirichlet(req)


@app.post("/v1/deviation", response_model=DeviationResponse)
def deviation(req: DeviationRequest) -> DeviationResponse:
    return runners.run_deviation(req)


@app.post("/v1/convergence", response_model=ConvergenceResponse)
def convergence(req: ConvergenceRequest) -> ConvergenceResponse:
    return runners.run_convergence(req)


@app.post("/v1/compare", response_model=CompareResponse)
def compare(req: CompareRequest) -> CompareResponse:
    return runners.run_compare(req)


@app.post("/v1/toeplitz-gap", response_model=ToeplitzGapResponse)
def toeplitz_gap(req: ToeplitzGapRequest) -> ToeplitzGapResponse:
    return runners.run_toeplitz_gap(req)
