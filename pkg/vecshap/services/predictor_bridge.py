"""Characteristic functions built from predictors and background data.

The black-box path uses the interventional expectation: coordinates outside
a coalition are replaced by each background row in turn and the predictor
outputs are averaged. Exact conditional expectations are only available in
closed form for the Gaussian-linear case (see gaussian_linear).
"""

import logging
from dataclasses import dataclass
from typing import Literal, Optional, Sequence, Tuple

import numpy as np

from ..config import INTERVENTIONAL_CAP, RIDGE_SCALE, check_players
from ..errors import CapExceededError, GameValueError, ShapeMismatchError, SingularBlockError
from ..games import Attribution, VectorGame, attribution_norm, game_difference, marginal_seminorm
from ..utils.summation import compensated_sum
from .gaussian_linear import GaussianInput, gaussian_game
from .predictors import LinearPredictor, Predictor
from .shapley_engine import shapley_subset

logger = logging.getLogger(__name__)

ExpectationMode = Literal["interventional", "conditional-gaussian"]

# hybrid rows evaluated per predictor call
HYBRID_BATCH_ROWS = 65536


@dataclass(frozen=True, eq=False)
class BackgroundSample:
    """N x n background observations standing in for the input distribution."""

    rows: np.ndarray
    columns: Tuple[str, ...] = ()

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.float64)
        if rows.ndim != 2 or rows.shape[0] < 1:
            raise GameValueError("background sample needs at least one row")
        check_players(rows.shape[1])
        if not np.all(np.isfinite(rows)):
            raise GameValueError("background entries must be finite")
        columns = tuple(self.columns) or tuple(f"x{j}" for j in range(rows.shape[1]))
        if len(columns) != rows.shape[1]:
            raise ShapeMismatchError(f"{len(columns)} column names for {rows.shape[1]} columns")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "columns", columns)

    @property
    def size(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True, eq=False)
class ExplanationResult:
    """Attribution of f at x together with the game and baseline it came from."""

    attribution: Attribution
    game: VectorGame
    prediction: np.ndarray
    baseline: np.ndarray
    expectation_mode: ExpectationMode

    @property
    def deviation(self) -> np.ndarray:
        return self.prediction - self.baseline


def efficiency_residual(result: ExplanationResult) -> float:
    """||sum_i phi_i - (f(x) - baseline)||_inf."""
    return float(np.max(np.abs(result.attribution.total() - result.deviation)))


def _check_inputs(f: Predictor, bg: BackgroundSample, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if f.n != bg.n or x.shape[0] != bg.n:
        raise ShapeMismatchError(
            f"predictor has n={f.n}, background has {bg.n} columns, instance has {x.shape[0]}"
        )
    if not np.all(np.isfinite(x)):
        raise GameValueError("instance must be finite")
    if bg.n > INTERVENTIONAL_CAP:
        raise CapExceededError(f"interventional path capped at n={INTERVENTIONAL_CAP}")
    return x


def _hybrid_outputs(f: Predictor, bg: BackgroundSample, x: np.ndarray, masks: np.ndarray) -> np.ndarray:
    """f at every (mask, row) hybrid point: x on the coalition, bg row elsewhere."""
    n = bg.n
    keep = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)
    hybrids = np.where(keep[:, None, :], x[None, None, :], bg.rows[None, :, :])
    outputs = f.evaluate_batch(hybrids.reshape(-1, n))
    return outputs.reshape(masks.shape[0], bg.size, f.m)


def _mask_chunks(n: int, rows: int):
    per_chunk = max(1, HYBRID_BATCH_ROWS // rows)
    masks = np.arange(1 << n, dtype=np.int64)
    for start in range(0, masks.shape[0], per_chunk):
        yield masks[start:start + per_chunk]


def _coalition_means(f: Predictor, bg: BackgroundSample, x: np.ndarray) -> np.ndarray:
    means = np.empty((1 << bg.n, f.m))
    for chunk in _mask_chunks(bg.n, bg.size):
        outputs = _hybrid_outputs(f, bg, x, chunk)
        means[chunk] = compensated_sum(outputs, axis=1) / bg.size
    # every hybrid of the grand coalition is x itself
    means[-1] = f.evaluate(x)
    return means


def interventional_game(f: Predictor, bg: BackgroundSample, x: np.ndarray) -> VectorGame:
    """v(S) = mean_rows f(x_S, row_{not S}) - mean_rows f(row)."""
    x = _check_inputs(f, bg, x)
    means = _coalition_means(f, bg, x)
    return VectorGame(bg.n, f.m, means - means[0])


def explain(f: Predictor, bg: BackgroundSample, x: np.ndarray, workers: Optional[int] = None) -> ExplanationResult:
    """Shapley attribution of the interventional game of f at x."""
    x = _check_inputs(f, bg, x)
    means = _coalition_means(f, bg, x)
    game = VectorGame(bg.n, f.m, means - means[0])
    result = ExplanationResult(
        attribution=shapley_subset(game, workers),
        game=game,
        prediction=means[-1].copy(),
        baseline=means[0].copy(),
        expectation_mode="interventional",
    )
    logger.debug(f"[explain] n={bg.n} m={f.m} N={bg.size} residual={efficiency_residual(result):.3e}")
    return result


def explain_gaussian(p: LinearPredictor, g: GaussianInput, x: np.ndarray, workers: Optional[int] = None) -> ExplanationResult:
    """Exact conditional-expectation explanation for the Gaussian-linear case."""
    game = gaussian_game(p, g, x)
    return ExplanationResult(
        attribution=shapley_subset(game, workers),
        game=game,
        prediction=p.evaluate(x),
        baseline=p.expected_output(g.mu),
        expectation_mode="conditional-gaussian",
    )


@dataclass(frozen=True)
class PredictorStability:
    """lhs = ||Phi(f;x) - Phi(h;x)||_{A,inf} against its two upper bounds."""

    lhs: float
    bound: float          # 2 * empirical sup of ||f - h||_inf over evaluated points
    sharp_bound: float    # ||v_f - v_h||_{Delta,inf}
    sup_difference: float

    def holds(self, tol: float) -> bool:
        return self.lhs <= self.bound + tol and self.lhs <= self.sharp_bound + tol


def predictor_stability(
    f: Predictor,
    h: Predictor,
    bg: BackgroundSample,
    x: np.ndarray,
) -> PredictorStability:
    """Compare explanations of f and h on the same background and instance."""
    if (f.n, f.m) != (h.n, h.m):
        raise ShapeMismatchError(f"predictors differ: (n={f.n}, m={f.m}) vs (n={h.n}, m={h.m})")
    x = _check_inputs(f, bg, x)
    means_f = np.empty((1 << bg.n, f.m))
    means_h = np.empty_like(means_f)
    sup = 0.0
    for chunk in _mask_chunks(bg.n, bg.size):
        out_f = _hybrid_outputs(f, bg, x, chunk)
        out_h = _hybrid_outputs(h, bg, x, chunk)
        sup = max(sup, float(np.max(np.abs(out_f - out_h))))
        means_f[chunk] = compensated_sum(out_f, axis=1) / bg.size
        means_h[chunk] = compensated_sum(out_h, axis=1) / bg.size
    means_f[-1] = f.evaluate(x)
    means_h[-1] = h.evaluate(x)

    v_f = VectorGame(bg.n, f.m, means_f - means_f[0])
    v_h = VectorGame(bg.n, h.m, means_h - means_h[0])
    lhs = attribution_norm(shapley_subset(v_f) - shapley_subset(v_h))
    result = PredictorStability(
        lhs=lhs,
        bound=2.0 * sup,
        sharp_bound=marginal_seminorm(game_difference(v_f, v_h)),
        sup_difference=sup,
    )
    logger.debug(f"[stability] lhs={lhs:.3e} bound={result.bound:.3e} sharp={result.sharp_bound:.3e}")
    return result


def empirical_moments(bg: BackgroundSample) -> GaussianInput:
    """Sample mean and (N-1)-normalized covariance, ridged if not positive definite."""
    if bg.size < 2:
        raise GameValueError("empirical moments need at least two background rows")
    mu = compensated_sum(bg.rows, axis=0) / bg.size
    centered = bg.rows - mu[None, :]
    sigma = centered.T @ centered / (bg.size - 1)
    sigma = 0.5 * (sigma + sigma.T)
    if not np.trace(sigma) > 0.0:
        raise GameValueError("background sample has zero variance in every feature")
    try:
        return GaussianInput(mu, sigma)
    except SingularBlockError:
        ridge = RIDGE_SCALE * float(np.trace(sigma)) / bg.n
        logger.warning(f"[moments] covariance not positive definite, adding ridge {ridge:.3e}")
        return GaussianInput(mu, sigma + ridge * np.eye(bg.n), ridged=True)
