"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..runs import RunConfig


class _ChannelRequest(BaseModel):
    alpha: float = Field(gt=0)
    phi: float = 0.0
    m: Optional[int] = None
    m_min: Optional[int] = None
    m_max: Optional[int] = None

    @model_validator(mode="after")
    def _check_m(self):
        if (self.m_min is None) != (self.m_max is None):
            raise ValueError("m_min and m_max must be given together")
        return self

    def _m_fields(self) -> dict:
        m_range = None if self.m_min is None else (self.m_min, self.m_max)
        return {"m": self.m, "m_range": m_range}


class ClassifyRequest(_ChannelRequest):
    def to_run_config(self) -> RunConfig:
        return RunConfig(command="classify", alpha=self.alpha, phi=self.phi, **self._m_fields())


class RingRequest(_ChannelRequest):
    mass: float = Field(default=1.0, gt=0)
    radius: float = Field(default=1.0, gt=0)

    def to_run_config(self) -> RunConfig:
        return RunConfig(
            command="ring", alpha=self.alpha, phi=self.phi,
            mass=self.mass, radius=self.radius, **self._m_fields(),
        )


class BoundRequest(_ChannelRequest):
    mass: float = Field(default=1.0, gt=0)
    a: float = Field(default=1.0, gt=0, description="core (flux tube) radius")
    branch: int = Field(default=0, ge=0)
    mode: Literal["closed", "root", "both"] = "both"
    gamma_sign: Literal["plus", "minus"] = "minus"

    def to_run_config(self) -> RunConfig:
        return RunConfig(
            command="bound", alpha=self.alpha, phi=self.phi, mass=self.mass,
            a=self.a, branch=self.branch, mode=self.mode,
            gamma_sign=self.gamma_sign, **self._m_fields(),
        )


class OracleRequest(_ChannelRequest):
    mass: float = Field(default=1.0, gt=0)
    a: float = Field(default=1.0, gt=0)
    branch: int = Field(default=0, ge=0)
    gamma_sign: Literal["plus", "minus"] = "minus"
    grid_n: int = Field(default=20000, ge=100)
    a_values: Optional[list[float]] = None

    def to_run_config(self) -> RunConfig:
        return RunConfig(
            command="oracle", alpha=self.alpha, phi=self.phi, mass=self.mass,
            a=self.a, branch=self.branch, gamma_sign=self.gamma_sign,
            grid_n=self.grid_n,
            a_values=None if self.a_values is None else tuple(self.a_values),
            **self._m_fields(),
        )


class SweepRequest(BaseModel):
    sweep_param: Literal["alpha", "phi", "mass", "a", "radius"]
    sweep_start: float
    sweep_stop: float
    sweep_count: int = Field(default=11, ge=2)
    alpha: float = Field(default=1.0, gt=0)
    phi: float = 0.0
    mass: float = Field(default=1.0, gt=0)
    a: float = Field(default=1.0, gt=0)
    radius: float = Field(default=1.0, gt=0)
    m: int = 0
    branch: int = Field(default=0, ge=0)
    gamma_sign: Literal["plus", "minus"] = "minus"

    def to_run_config(self) -> RunConfig:
        return RunConfig(
            command="sweep", alpha=self.alpha, phi=self.phi, mass=self.mass,
            a=self.a, radius=self.radius, m=self.m, branch=self.branch,
            gamma_sign=self.gamma_sign, sweep_param=self.sweep_param,
            sweep_start=self.sweep_start, sweep_stop=self.sweep_stop,
            sweep_count=self.sweep_count,
        )


class ReportResponse(BaseModel):
    run_config: dict
    rows: list[dict]
    diagnostics: list[dict]
    exit_code: int
