"""Pydantic request/response models for the service layer.

These mirror the run-configuration fields consumed by the CLI; the handlers
translate them into the core dataclasses.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class GyroParamsModel(BaseModel):
    hbar: float = 1.0
    c: float = 1.0
    mass: float = 1.0
    inertia: tuple[float, float, float] = (1.0, 1.0, 1.0)


class SpectrumRequest(BaseModel):
    command: Literal["kg", "dirac"] = "kg"
    params: GyroParamsModel = Field(default_factory=GyroParamsModel)
    variant: Literal["abelian", "nonabelian"] = "abelian"
    v: Optional[tuple[float, float, float]] = None
    l_max: int = Field(default=2, ge=0, le=50)


class SpectrumRowModel(BaseModel):
    l: int
    m: str
    branch: Optional[int] = None
    sign: Literal["+", "-"]
    E_closed: Optional[float] = None
    E_numeric: float
    rel_diff: Optional[float] = None
    scan_value: Optional[float] = None


class SpectrumResponse(BaseModel):
    meta: dict
    rows: list[SpectrumRowModel]


class ScanRequest(SpectrumRequest):
    command: Literal["scan"] = "scan"  # type: ignore[assignment]
    target: Literal["kg", "dirac"] = "kg"
    axis: Literal["I3_over_I1", "mass", "v3"] = "I3_over_I1"
    start: float = 0.5
    stop: float = 2.0
    step: float = 0.5


class ValidateRequest(BaseModel):
    l_max: int = Field(default=10, ge=0, le=50)
    n_max: int = Field(default=5, ge=1, le=8)
    n_systems: int = Field(default=200, ge=1, le=5000)
    seed: int = 20240802


class CheckModel(BaseModel):
    name: str
    residual: float
    tolerance: float
    passed: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class ValidationReport(BaseModel):
    passed: bool
    checks: list[CheckModel]
    conventions: dict


class ParticleSystemModel(BaseModel):
    """The flat particle-system document; field names are part of the file format."""

    masses: list[float]
    positions: list[tuple[float, float, float, float]]
    momenta: list[tuple[float, float, float, float]]
    units: Literal["natural"] = "natural"


class CovariantRequest(BaseModel):
    system: ParticleSystemModel
    boost_velocity: Optional[tuple[float, float, float]] = None


class CovariantCheck(BaseModel):
    name: str
    residual: Optional[float] = None
    tolerance: float
    passed: bool


class CovariantResponse(BaseModel):
    passed: bool
    quantities: dict
    checks: list[CovariantCheck]
