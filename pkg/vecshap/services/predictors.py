"""Predictors f: R^n -> R^m that can be explained.

Every predictor is a pure function of its input, so batched evaluation may
run concurrently.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from ..config import MAX_POLY_DEGREE, check_outputs, check_players
from ..errors import GameValueError, ShapeMismatchError


class Predictor(ABC):
    """Deterministic map from R^n to R^m."""

    n: int
    m: int

    @abstractmethod
    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        """Evaluate k inputs (k, n) -> (k, m)."""

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64).reshape(1, -1)
        return self.evaluate_batch(x)[0]

    @abstractmethod
    def depends_on(self, i: int) -> bool:
        """False only if output provably never varies with coordinate i."""

    def _check_batch(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.n:
            raise ShapeMismatchError(f"expected inputs with {self.n} columns, got shape {X.shape}")
        return X


@dataclass(frozen=True, eq=False)
class LinearPredictor(Predictor):
    """f(x) = b0 + B^T x; row B[i] is feature i's coefficient vector."""

    b0: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        b0 = np.array(self.b0, dtype=np.float64).reshape(-1)
        B = np.array(self.B, dtype=np.float64)
        if B.ndim != 2 or B.shape[1] != b0.shape[0]:
            raise ShapeMismatchError(f"B has shape {B.shape}, expected (n, {b0.shape[0]})")
        if not (np.all(np.isfinite(b0)) and np.all(np.isfinite(B))):
            raise GameValueError("linear predictor entries must be finite")
        check_players(B.shape[0])
        check_outputs(B.shape[1])
        b0.setflags(write=False)
        B.setflags(write=False)
        object.__setattr__(self, "b0", b0)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return self.B.shape[0]

    @property
    def m(self) -> int:
        return self.B.shape[1]

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        X = self._check_batch(X)
        return self.b0[None, :] + X @ self.B

    def depends_on(self, i: int) -> bool:
        return bool(np.any(self.B[i] != 0.0))

    def expected_output(self, mu: np.ndarray) -> np.ndarray:
        """E f(X) = b0 + B^T mu."""
        return self.b0 + self.B.T @ np.asarray(mu, dtype=np.float64)


@dataclass(frozen=True)
class PolynomialTerm:
    coeff: float
    exponents: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True, eq=False)
class PolynomialPredictor(Predictor):
    """Each output is a fixed multivariate polynomial of degree <= 3."""

    n: int
    outputs: Tuple[Tuple[PolynomialTerm, ...], ...]

    def __post_init__(self):
        check_players(self.n)
        check_outputs(len(self.outputs))
        for terms in self.outputs:
            for term in terms:
                if len(term.exponents) != self.n:
                    raise ShapeMismatchError(f"term has {len(term.exponents)} exponents, expected {self.n}")
                if min(term.exponents, default=0) < 0 or term.degree > MAX_POLY_DEGREE:
                    raise GameValueError(f"polynomial terms must have degree <= {MAX_POLY_DEGREE}")
                if not np.isfinite(term.coeff):
                    raise GameValueError("polynomial coefficients must be finite")

    @classmethod
    def from_terms(cls, n: int, outputs: Sequence[Sequence[Tuple[float, Sequence[int]]]]) -> "PolynomialPredictor":
        return cls(n, tuple(
            tuple(PolynomialTerm(float(c), tuple(int(e) for e in exps)) for c, exps in terms)
            for terms in outputs
        ))

    @property
    def m(self) -> int:
        return len(self.outputs)

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        X = self._check_batch(X)
        out = np.zeros((X.shape[0], self.m))
        for k, terms in enumerate(self.outputs):
            for term in terms:
                monomial = np.ones(X.shape[0])
                for j, e in enumerate(term.exponents):
                    if e:
                        monomial = monomial * X[:, j] ** e
                out[:, k] += term.coeff * monomial
        return out

    def depends_on(self, i: int) -> bool:
        return any(t.coeff != 0.0 and t.exponents[i] > 0 for terms in self.outputs for t in terms)


@dataclass(frozen=True, eq=False)
class CombinedPredictor(Predictor):
    """sum_j alpha_j f_j(x) + offset."""

    terms: Tuple[Tuple[float, Predictor], ...]
    offset: np.ndarray = field(default=None)

    def __post_init__(self):
        if not self.terms:
            raise GameValueError("combined predictor needs at least one term")
        n, m = self.terms[0][1].n, self.terms[0][1].m
        if any((f.n, f.m) != (n, m) for _, f in self.terms):
            raise ShapeMismatchError("combined predictors must share (n, m)")
        offset = np.zeros(m) if self.offset is None else np.array(self.offset, dtype=np.float64).reshape(-1)
        if offset.shape != (m,):
            raise ShapeMismatchError(f"offset must have {m} entries")
        object.__setattr__(self, "terms", tuple((float(a), f) for a, f in self.terms))
        object.__setattr__(self, "offset", offset)

    @property
    def n(self) -> int:
        return self.terms[0][1].n

    @property
    def m(self) -> int:
        return self.terms[0][1].m

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        X = self._check_batch(X)
        out = np.tile(self.offset, (X.shape[0], 1))
        for alpha, f in self.terms:
            out = out + alpha * f.evaluate_batch(X)
        return out

    def depends_on(self, i: int) -> bool:
        return any(alpha != 0.0 and f.depends_on(i) for alpha, f in self.terms)


class ConstantPredictor(Predictor):
    """f(x) = c for every x."""

    def __init__(self, n: int, c: Sequence[float]):
        self.n = n
        self.c = np.asarray(c, dtype=np.float64).reshape(-1)
        self.m = self.c.shape[0]

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        X = self._check_batch(X)
        return np.tile(self.c, (X.shape[0], 1))

    def depends_on(self, i: int) -> bool:
        return False
