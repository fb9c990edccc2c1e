"""FastAPI service wrapping the solver library.

Computations are pure and stateless, so every endpoint is a POST taking
the run parameters and returning the same report structure the CLI
emits.  A run that finds no bound state is a valid outcome: it comes back
HTTP 200 with ``exit_code`` 3 in the body and the reason in
``diagnostics``.  Malformed parameters are HTTP 422.
"""

from __future__ import annotations

import logging
import os

from fastapi import FastAPI, HTTPException

from ..errors import ConfigError
from ..reports import RunReport
from ..runs import run
from .models import (
    BoundRequest,
    ClassifyRequest,
    OracleRequest,
    ReportResponse,
    RingRequest,
    SweepRequest,
)


def _response(report: RunReport) -> ReportResponse:
    return ReportResponse(
        run_config=report.run_config,
        rows=report.rows,
        diagnostics=report.diagnostics,
        exit_code=report.exit_code,
    )


def create_app() -> FastAPI:
    level = os.environ.get("CONICAL_AB_LOG")
    if level:
        logging.basicConfig(level=level.upper())
    app = FastAPI(
        title="conical-ab",
        description="Spectra and bound states of a charged particle on a "
        "cone or anti-cone threaded by a magnetic flux line.",
        version="0.1.0",
    )

    def _execute(request) -> ReportResponse:
        try:
            return _response(run(request.to_run_config()))
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/v1/classify", response_model=ReportResponse)
    def classify(request: ClassifyRequest) -> ReportResponse:
        return _execute(request)

    @app.post("/v1/ring", response_model=ReportResponse)
    def ring(request: RingRequest) -> ReportResponse:
        return _execute(request)

    @app.post("/v1/bound", response_model=ReportResponse)
    def bound(request: BoundRequest) -> ReportResponse:
        return _execute(request)

    @app.post("/v1/oracle", response_model=ReportResponse)
    def oracle(request: OracleRequest) -> ReportResponse:
        return _execute(request)

    @app.post("/v1/sweep", response_model=ReportResponse)
    def sweep(request: SweepRequest) -> ReportResponse:
        return _execute(request)

    return app


app = create_app()
