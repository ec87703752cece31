"""Closed-form SHAP for linear multi-output predictors with Gaussian inputs.

For X ~ N(mu, Sigma) the conditional mean is linear in the known block:
E[X | X_S = x_S] = mu + A_S (x_S - mu_S) with A_S = Sigma[:, S] Sigma[S, S]^-1.
Embedding A_S into n x n (zero columns outside S) gives the matrices that
drive both the exact game and the M_i(Sigma) attribution matrices.
"""

import logging
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from scipy import linalg

from ..config import GAUSSIAN_CAP, PIVOT_TOL, SPD_JITTER, SYMMETRY_REL_TOL, check_players
from ..errors import CapExceededError, GameValueError, ShapeMismatchError, SingularBlockError
from ..games import Attribution, Coalition, VectorGame, coalition_sizes, masks_without
from ..utils.summation import CompensatedAccumulator, compensated_sum
from ..utils.workers import map_ordered
from .predictors import LinearPredictor
from .shapley_engine import shapley_weights

logger = logging.getLogger(__name__)

# coalitions stacked per compensated block when summing M_i
MATRIX_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class GaussianInput:
    """Background distribution N(mu, sigma) with sigma positive definite."""

    mu: np.ndarray
    sigma: np.ndarray
    ridged: bool = False

    def __post_init__(self):
        mu = np.array(self.mu, dtype=np.float64).reshape(-1)
        sigma = np.array(self.sigma, dtype=np.float64)
        n = mu.shape[0]
        check_players(n)
        if sigma.shape != (n, n):
            raise ShapeMismatchError(f"sigma has shape {sigma.shape}, expected {(n, n)}")
        if not (np.all(np.isfinite(mu)) and np.all(np.isfinite(sigma))):
            raise GameValueError("mean and covariance must be finite")
        scale = max(float(np.max(np.abs(sigma))), np.finfo(float).tiny)
        if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_REL_TOL * scale:
            raise GameValueError("covariance matrix is not symmetric")
        _cholesky_block(sigma, np.arange(n), float(np.max(np.diag(sigma))))
        mu.setflags(write=False)
        sigma.setflags(write=False)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)

    @property
    def n(self) -> int:
        return self.mu.shape[0]

    @property
    def max_diagonal(self) -> float:
        return float(np.max(np.diag(self.sigma)))

    def is_diagonal(self) -> bool:
        return bool(np.all(self.sigma[~np.eye(self.n, dtype=bool)] == 0.0))


def _cholesky_block(sigma: np.ndarray, idx: np.ndarray, max_diag: float) -> np.ndarray:
    """Lower Cholesky factor of sigma[idx, idx] with a relative pivot check."""
    block = sigma[np.ix_(idx, idx)]
    try:
        factor = linalg.cholesky(block, lower=True)
    except linalg.LinAlgError as e:
        raise SingularBlockError("singular conditional block") from e
    if np.min(np.diag(factor)) ** 2 <= PIVOT_TOL * max_diag:
        raise SingularBlockError("singular conditional block")
    return factor


def _players(mask: int, n: int) -> np.ndarray:
    return np.array([i for i in range(n) if (mask >> i) & 1], dtype=np.int64)


class ConditionalMatrixSet:
    """Memo of embedded conditional expectation matrices A_hat_S for one input.

    Entries are inserted once under a lock and never mutated, so concurrent
    readers always see complete matrices.
    """

    def __init__(self, g: GaussianInput):
        self.g = g
        self.n = g.n
        self._cache: Dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    def get(self, mask: int) -> np.ndarray:
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        matrix = self._compute(mask)
        with self._lock:
            return self._cache.setdefault(mask, matrix)

    def __len__(self) -> int:
        return len(self._cache)

    def _compute(self, mask: int) -> np.ndarray:
        n = self.n
        out = np.zeros((n, n))
        if mask == 0:
            out.setflags(write=False)
            return out
        idx = _players(mask, n)
        factor = _cholesky_block(self.g.sigma, idx, self.g.max_diagonal)
        # Sigma_SS X = Sigma[:, S]^T  ->  A_S = X^T
        solved = linalg.cho_solve((factor, True), self.g.sigma[:, idx].T)
        out[:, idx] = solved.T
        out.setflags(write=False)
        return out


def conditional_matrix(g: GaussianInput, S: Coalition) -> np.ndarray:
    """A_hat_S: Sigma[:, S] Sigma[S, S]^-1 embedded with zero columns outside S."""
    if S.n != g.n:
        raise ShapeMismatchError(f"coalition over {S.n} players, input has {g.n}")
    return ConditionalMatrixSet(g).get(S.mask)


def _check_gaussian_cap(n: int) -> None:
    if n > GAUSSIAN_CAP:
        raise CapExceededError(f"Gaussian-linear path capped at n={GAUSSIAN_CAP}")


def _attribution_matrix(memo: ConditionalMatrixSet, i: int) -> np.ndarray:
    n = memo.n
    bit = 1 << i
    weights = shapley_weights(n).w
    sizes = coalition_sizes(n)
    masks = masks_without(n, i)
    acc = CompensatedAccumulator((n, n))
    for start in range(0, masks.shape[0], MATRIX_CHUNK):
        terms = np.stack([
            weights[sizes[s]] * (memo.get(int(s) | bit) - memo.get(int(s)))
            for s in masks[start:start + MATRIX_CHUNK]
        ])
        acc.add(compensated_sum(terms, axis=0))
    return acc.result()


def attribution_matrix(
    g: GaussianInput,
    i: int,
    memo: Optional[ConditionalMatrixSet] = None,
) -> np.ndarray:
    """M_i(Sigma) = sum_{S without i} w(S) (A_hat_{S+i} - A_hat_S)."""
    _check_gaussian_cap(g.n)
    if not 0 <= i < g.n:
        raise GameValueError(f"player {i} out of range for n={g.n}")
    return _attribution_matrix(memo if memo is not None else ConditionalMatrixSet(g), i)


def attribution_matrices(g: GaussianInput, workers: Optional[int] = None) -> List[np.ndarray]:
    """M_i(Sigma) for every player, sharing one conditional-matrix memo."""
    _check_gaussian_cap(g.n)
    memo = ConditionalMatrixSet(g)
    matrices = map_ordered(lambda i: _attribution_matrix(memo, i), range(g.n), workers)
    logger.debug(f"[gaussian] built {len(memo)} conditional matrices for n={g.n}")
    return matrices


def _check_pair(p: LinearPredictor, g: GaussianInput, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if p.n != g.n or x.shape[0] != g.n:
        raise ShapeMismatchError(
            f"predictor has n={p.n}, input n={g.n}, instance has {x.shape[0]} features"
        )
    if not np.all(np.isfinite(x)):
        raise GameValueError("instance must be finite")
    return x


def shap_linear_independent(p: LinearPredictor, g: GaussianInput, x: np.ndarray) -> Attribution:
    """phi_i = B_i (x_i - mu_i) for diagonal sigma."""
    x = _check_pair(p, g, x)
    if not g.is_diagonal():
        raise GameValueError("use correlated path")
    return Attribution(p.n, p.m, p.B * (x - g.mu)[:, None])


def shap_linear_correlated(
    p: LinearPredictor,
    g: GaussianInput,
    x: np.ndarray,
    workers: Optional[int] = None,
) -> Attribution:
    """phi_i = B^T M_i(Sigma) (x - mu)."""
    x = _check_pair(p, g, x)
    centered = x - g.mu
    rows = [p.B.T @ (M @ centered) for M in attribution_matrices(g, workers)]
    return Attribution(p.n, p.m, np.vstack(rows))


def gaussian_game(p: LinearPredictor, g: GaussianInput, x: np.ndarray) -> VectorGame:
    """Exact centered game v(S) = B^T A_hat_S (x - mu)."""
    x = _check_pair(p, g, x)
    _check_gaussian_cap(g.n)
    n = g.n
    centered = x - g.mu
    values = np.zeros((1 << n, p.m))
    for mask in range(1, 1 << n):
        idx = _players(mask, n)
        factor = _cholesky_block(g.sigma, idx, g.max_diagonal)
        # E[X - mu | X_S = x_S] = Sigma[:, S] Sigma_SS^-1 (x_S - mu_S)
        shift = g.sigma[:, idx] @ linalg.cho_solve((factor, True), centered[idx])
        values[mask] = p.B.T @ shift
    return VectorGame(n, p.m, values)


def random_spd(n: int, rng: np.random.Generator, jitter: float = SPD_JITTER) -> np.ndarray:
    """L L^T + jitter * I with L entries uniform on [-1, 1]."""
    L = rng.uniform(-1.0, 1.0, size=(n, n))
    sigma = L @ L.T + jitter * np.eye(n)
    return 0.5 * (sigma + sigma.T)
