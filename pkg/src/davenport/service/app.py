"""HTTP face of the package: one POST route per handler.

Run locally with `uvicorn davenport.service.app:app`. Domain errors map to
400 with an error_kind of "parameter" or "computation"; malformed request
bodies keep FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ComputationError, ParameterError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="davenport-bounds", version=__version__)

    @app.exception_handler(ParameterError)
    async def _parameter_error(_: Request, exc: ParameterError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"message": str(exc), "error_kind": "parameter"}},
        )

    @app.exception_handler(ComputationError)
    async def _computation_error(_: Request, exc: ComputationError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"message": str(exc), "error_kind": "computation"}},
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/table/theorem1", response_model=schemas.TheoremTableResponse)
    def table_theorem1(req: schemas.TheoremTableRequest) -> schemas.TheoremTableResponse:
        return handlers.theorem_table(req)

    @app.post("/bounds/eval", response_model=schemas.BoundsEvalResponse)
    def bounds_eval(req: schemas.BoundsEvalRequest) -> schemas.BoundsEvalResponse:
        return handlers.bounds_eval(req)

    @app.post("/solve", response_model=schemas.SolveResponse)
    def solve(req: schemas.SolveRequest) -> schemas.SolveResponse:
        return handlers.solve(req)

    @app.post("/heuristic", response_model=schemas.HeuristicResponse)
    def heuristic(req: schemas.HeuristicRequest) -> schemas.HeuristicResponse:
        return handlers.heuristic_table(req)

    @app.post("/asymptotic", response_model=schemas.AsymptoticResponse)
    def asymptotic(req: schemas.AsymptoticRequest) -> schemas.AsymptoticResponse:
        return handlers.asymptotic(req)

    @app.post("/exact/davenport", response_model=schemas.ExactDavenportResponse)
    def exact_davenport(req: schemas.ExactDavenportRequest) -> schemas.ExactDavenportResponse:
        return handlers.exact_davenport(req)

    @app.post("/exact/sconst", response_model=schemas.ExactSconstResponse)
    def exact_sconst(req: schemas.ExactSconstRequest) -> schemas.ExactSconstResponse:
        return handlers.exact_sconst(req)

    @app.post("/exact/decompose", response_model=schemas.ExactDecomposeResponse)
    def exact_decompose(req: schemas.ExactDecomposeRequest) -> schemas.ExactDecomposeResponse:
        return handlers.exact_decompose(req)

    @app.post("/counting/ratio", response_model=schemas.CountingRatioResponse)
    def counting_ratio(req: schemas.CountingRatioRequest) -> schemas.CountingRatioResponse:
        return handlers.counting_ratio(req)

    @app.post("/counting/lower", response_model=schemas.CountingLowerResponse)
    def counting_lower(req: schemas.CountingLowerRequest) -> schemas.CountingLowerResponse:
        return handlers.counting_lower(req)

    @app.post("/corollary", response_model=schemas.CorollaryResponse)
    def corollary(req: schemas.CorollaryRequest) -> schemas.CorollaryResponse:
        return handlers.corollary(req)

    @app.post("/verify/pcm", response_model=schemas.VerifyPcmResponse)
    def verify_pcm(req: schemas.VerifyPcmRequest) -> schemas.VerifyPcmResponse:
        return handlers.verify_pcm(req)

    return app


app = create_app()
