"""Pydantic models for input files and reports."""

from .files import (
    GameFile,
    LinearModelFile,
    PolynomialTermModel,
    PolynomialModelFile,
)
from .reports import (
    AxiomRecord,
    AxiomReport,
    CampaignConfig,
    CampaignSummary,
    Tolerances,
    Witness,
)

__all__ = [
    "GameFile",
    "LinearModelFile",
    "PolynomialTermModel",
    "PolynomialModelFile",
    "AxiomRecord",
    "AxiomReport",
    "CampaignConfig",
    "CampaignSummary",
    "Tolerances",
    "Witness",
]
