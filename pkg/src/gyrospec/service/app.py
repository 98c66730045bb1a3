"""FastAPI application wrapping the spectral engine."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import GyrospecError
from . import handlers
from .models import (
    CovariantRequest,
    CovariantResponse,
    ScanRequest,
    SpectrumRequest,
    SpectrumResponse,
    ValidateRequest,
    ValidationReport,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="gyrospec",
        description="Spectra of relativistic quantum rigid rotors and covariant kinematics checks",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "service": "gyrospec"}

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest) -> SpectrumResponse:
        try:
            return handlers.compute_spectrum(req)
        except GyrospecError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/scan", response_model=SpectrumResponse)
    def scan(req: ScanRequest) -> SpectrumResponse:
        try:
            return handlers.compute_scan(req)
        except GyrospecError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/validate", response_model=ValidationReport)
    def validate(req: ValidateRequest) -> ValidationReport:
        return handlers.compute_validation(req)

    @app.post("/covariant", response_model=CovariantResponse)
    def covariant(req: CovariantRequest) -> CovariantResponse:
        try:
            return handlers.compute_covariant(req)
        except GyrospecError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return app


app = create_app()
