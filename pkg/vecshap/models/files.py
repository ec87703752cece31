"""Pydantic schemas for the JSON file formats read and written by the CLI."""

from typing import Optional

from pydantic import BaseModel, Field, RootModel, field_validator, model_validator

from ..config import MAX_OUTPUTS, MAX_PLAYERS, MAX_POLY_DEGREE


class GameFile(BaseModel):
    """{"n": int, "m": int, "values": {"<mask>": [m floats]}}; missing masks are zero."""
    n: int = Field(..., ge=1, le=MAX_PLAYERS)
    m: int = Field(..., ge=1, le=MAX_OUTPUTS)
    values: dict[str, list[float]] = Field(default_factory=dict)

    @field_validator("values")
    @classmethod
    def _decimal_keys(cls, values: dict[str, list[float]]) -> dict[str, list[float]]:
        for key in values:
            if not key.isdigit():
                raise ValueError(f"coalition key {key!r} is not a decimal mask")
        return values

    def entries(self) -> list[tuple[int, list[float]]]:
        return [(int(key), vector) for key, vector in self.values.items()]


class LinearModelFile(BaseModel):
    """{"b0": [m], "B": [[m] x n], "mu": [n], "sigma": [[n] x n]}.

    mu and sigma are only required by the Gaussian-linear path.
    """
    b0: list[float]
    B: list[list[float]]
    mu: Optional[list[float]] = None
    sigma: Optional[list[list[float]]] = None

    @model_validator(mode="after")
    def _consistent_shapes(self):
        m = len(self.b0)
        if not self.B or any(len(row) != m for row in self.B):
            raise ValueError(f"every row of B must have {m} entries")
        n = len(self.B)
        if self.mu is not None and len(self.mu) != n:
            raise ValueError(f"mu must have {n} entries")
        if self.sigma is not None and (len(self.sigma) != n or any(len(r) != n for r in self.sigma)):
            raise ValueError(f"sigma must be {n}x{n}")
        return self


class PolynomialTermModel(BaseModel):
    """coeff * prod_j x_j^exponents[j]."""
    coeff: float
    exponents: list[int]

    @field_validator("exponents")
    @classmethod
    def _degree(cls, exponents: list[int]) -> list[int]:
        if any(e < 0 for e in exponents):
            raise ValueError("exponents must be nonnegative")
        if sum(exponents) > MAX_POLY_DEGREE:
            raise ValueError(f"term degree exceeds {MAX_POLY_DEGREE}")
        return exponents


class PolynomialModelFile(RootModel[list[list[PolynomialTermModel]]]):
    """One list of terms per output."""

    @model_validator(mode="after")
    def _same_arity(self):
        widths = {len(t.exponents) for terms in self.root for t in terms}
        if not self.root:
            raise ValueError("polynomial model needs at least one output")
        if len(widths) > 1:
            raise ValueError("all terms must share the same number of exponents")
        return self
