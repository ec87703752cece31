"""Configuration module for vecshap."""

from functools import lru_cache

from .. import __version__

from pydantic_settings import BaseSettings, SettingsConfigDict

from .limits import (
    MAX_PLAYERS,
    MAX_OUTPUTS,
    PERMUTATION_CAP,
    UNANIMITY_CAP,
    GAUSSIAN_CAP,
    INTERVENTIONAL_CAP,
    MAX_POLY_DEGREE,
    EFFICIENCY_TOL,
    SYMMETRY_TOL,
    DUMMY_TOL,
    ADDITIVITY_TOL,
    STABILITY_TOL,
    LEAKAGE_TOL,
    RECONSTRUCTION_TOL,
    PIVOT_TOL,
    SYMMETRY_REL_TOL,
    RIDGE_SCALE,
    SPD_JITTER,
    STRUCTURED_GAME_PERIOD,
    ADDITIVITY_COEF_RANGE,
    check_players,
    check_outputs,
)


class Settings(BaseSettings):
    """Runtime settings loaded from VECSHAP_* environment variables.

    Nothing here changes a computed value: worker count is covered by the
    fixed-order summation contract and log level only touches stderr.
    """

    app_name: str = "vecshap"
    app_version: str = __version__
    log_level: str = "INFO"

    # Threads used to partition per-player sums and campaign trials
    workers: int = 1

    model_config = SettingsConfigDict(
        env_prefix="VECSHAP_",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


__all__ = [
    "Settings",
    "get_settings",
    "MAX_PLAYERS",
    "MAX_OUTPUTS",
    "PERMUTATION_CAP",
    "UNANIMITY_CAP",
    "GAUSSIAN_CAP",
    "INTERVENTIONAL_CAP",
    "MAX_POLY_DEGREE",
    "EFFICIENCY_TOL",
    "SYMMETRY_TOL",
    "DUMMY_TOL",
    "ADDITIVITY_TOL",
    "STABILITY_TOL",
    "LEAKAGE_TOL",
    "RECONSTRUCTION_TOL",
    "PIVOT_TOL",
    "SYMMETRY_REL_TOL",
    "RIDGE_SCALE",
    "SPD_JITTER",
    "STRUCTURED_GAME_PERIOD",
    "ADDITIVITY_COEF_RANGE",
    "check_players",
    "check_outputs",
]
