"""FastAPI application exposing the hull/steering/EAQECC operations."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..errors import SigmaHullError
from . import handlers
from . import schemas as sch


def create_app() -> FastAPI:
    app = FastAPI(
        title="sigmahull",
        description="Sigma hulls of linear and matrix-product codes, with EAQECC synthesis",
        version="0.1.0",
    )

    @app.exception_handler(SigmaHullError)
    async def domain_error(_, exc: SigmaHullError):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/hull", response_model=sch.HullResponse)
    def hull(req: sch.HullRequest):
        return handlers.hull(req)

    @app.post("/dual", response_model=sch.DualResponse)
    def dual(req: sch.DualRequest):
        return handlers.dual(req)

    @app.post("/mp/build", response_model=sch.MpBuildResponse)
    def mp_build(req: sch.MpRequest):
        return handlers.mp_build(req)

    @app.post("/mp/hull", response_model=sch.MpHullResponse)
    def mp_hull(req: sch.MpRequest):
        return handlers.mp_hull(req)

    @app.post("/mp/check-dc", response_model=sch.CheckResponse)
    def check_dc(req: sch.MpRequest):
        return handlers.check_dual_containing(req)

    @app.post("/mp/check-so", response_model=sch.CheckResponse)
    def check_so(req: sch.MpRequest):
        return handlers.check_self_orthogonal(req)

    @app.post("/steer", response_model=sch.SteerResponse)
    def steer(req: sch.SteerRequest):
        return handlers.steer(req)

    @app.post("/eaqecc", response_model=sch.EaqeccResponse)
    def eaqecc(req: sch.EaqeccRequest):
        return handlers.eaqecc(req)

    @app.post("/verify", response_model=sch.VerifyResponse)
    def verify(req: sch.VerifyRequest):
        return handlers.run_verify(req)

    return app


app = create_app()
