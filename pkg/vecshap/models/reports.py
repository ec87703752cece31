"""Pydantic models for axiom campaigns and their reports."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..config import (
    ADDITIVITY_TOL,
    DUMMY_TOL,
    EFFICIENCY_TOL,
    LEAKAGE_TOL,
    MAX_OUTPUTS,
    MAX_PLAYERS,
    STABILITY_TOL,
    SYMMETRY_TOL,
)


class Tolerances(BaseModel):
    """Pass thresholds for each check."""
    efficiency: float = Field(default=EFFICIENCY_TOL, ge=0)
    symmetry: float = Field(default=SYMMETRY_TOL, ge=0)
    dummy: float = Field(default=DUMMY_TOL, ge=0)
    additivity: float = Field(default=ADDITIVITY_TOL, ge=0)
    coordinatewise: float = Field(default=LEAKAGE_TOL, ge=0)
    leakage: float = Field(default=LEAKAGE_TOL, ge=0)
    stability: float = Field(default=STABILITY_TOL, ge=0)


class Witness(BaseModel):
    """Indices where a residual attains its maximum (unused ones stay None)."""
    i: Optional[int] = None
    j: Optional[int] = None
    S: Optional[int] = Field(default=None, description="Coalition mask")
    k: Optional[int] = Field(default=None, description="Output coordinate")


class AxiomRecord(BaseModel):
    """Outcome of a single check on a single game."""
    trial: int
    n: int
    m: int
    axiom: str
    residual: float
    tolerance: float
    passed: bool = Field(..., serialization_alias="pass")
    witness: Witness = Field(default_factory=Witness)

    @model_validator(mode="after")
    def _pass_matches_residual(self):
        if self.passed != (self.residual <= self.tolerance):
            raise ValueError("pass flag must equal residual <= tolerance")
        return self


class AxiomReport(BaseModel):
    """All records for one trial of a campaign."""
    trial: int
    n: int
    m: int
    seed: Optional[int] = None
    source: str = Field(default="random", description="random | structured | file")
    records: list[AxiomRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class CampaignConfig(BaseModel):
    """Parameters of a seeded axiom campaign."""
    n: int = Field(..., ge=1, le=MAX_PLAYERS)
    m: int = Field(..., ge=1, le=MAX_OUTPUTS)
    trials: int = Field(..., ge=0)
    seed: int = Field(..., ge=0)
    tolerances: Tolerances = Field(default_factory=Tolerances)


class CampaignSummary(BaseModel):
    """Pass/fail counts over a campaign."""
    trials: int
    records: int
    passed: int
    failed: int
    failures_by_axiom: dict[str, int] = Field(default_factory=dict)
