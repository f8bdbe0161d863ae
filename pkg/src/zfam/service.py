"""HTTP front end.

Run with ``uvicorn zfam.service:app``.  Every endpoint is a thin wrapper
around the shared handlers; bad input maps to 400 with an ErrorResponse body,
budget exhaustion stays a 200 whose payload flags the shortfall, and anything
signalling an internal inconsistency maps to 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, handlers
from .errors import CapacityError, UsageError, ZfamError
from .models import (
    ComponentsRequest,
    ComponentsResponse,
    EnumerateRequest,
    EnumerateResponse,
    ErrorResponse,
    FamilyRequest,
    FamilyResponse,
    HealthResponse,
    InvariantsRequest,
    InvariantsResponse,
    ReportRequest,
    ReportResponse,
)


def _error_payload(exc: Exception) -> dict:
    return ErrorResponse(error=str(exc)).model_dump(by_alias=True)


def create_app() -> FastAPI:
    app = FastAPI(title="zfam", version=__version__)

    @app.exception_handler(UsageError)
    async def usage_error_handler(request: Request, exc: UsageError) -> JSONResponse:
        return JSONResponse(status_code=400, content=_error_payload(exc))

    @app.exception_handler(CapacityError)
    async def capacity_error_handler(request: Request, exc: CapacityError) -> JSONResponse:
        return JSONResponse(status_code=400, content=_error_payload(exc))

    @app.exception_handler(ZfamError)
    async def zfam_error_handler(request: Request, exc: ZfamError) -> JSONResponse:
        return JSONResponse(status_code=500, content=_error_payload(exc))

    @app.get("/v1/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return handlers.handle_health()

    @app.post("/v1/enumerate", response_model=EnumerateResponse)
    def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
        return handlers.handle_enumerate(req)

    @app.post("/v1/components", response_model=ComponentsResponse)
    def components_endpoint(req: ComponentsRequest) -> ComponentsResponse:
        return handlers.handle_components(req)

    @app.post("/v1/invariants", response_model=InvariantsResponse)
    def invariants_endpoint(req: InvariantsRequest) -> InvariantsResponse:
        return handlers.handle_invariants(req)

    @app.post("/v1/family", response_model=FamilyResponse)
    def family_endpoint(req: FamilyRequest) -> FamilyResponse:
        return handlers.handle_family(req)

    @app.post("/v1/report", response_model=ReportResponse)
    def report_endpoint(req: ReportRequest) -> ReportResponse:
        return handlers.handle_report(req)

    return app


app = create_app()
