"""Cross-model agreement of feature-importance vectors."""

from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from ..errors import GameValueError, ShapeMismatchError, UndefinedMetricError
from ..games import Attribution
from ..utils.summation import compensated_sum


def _pair(a: Sequence[float], b: Sequence[float], min_len: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"vectors differ in length: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[0] < min_len:
        raise ShapeMismatchError(f"need vectors of length >= {min_len}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise GameValueError("importance vectors must be finite")
    return a, b


def cosine_similarity(a: Sequence[float], b: Sequence[float]) -> float:
    """<a, b> / (||a||_2 ||b||_2)."""
    a, b = _pair(a, b, 1)
    norm_a, norm_b = np.linalg.norm(a), np.linalg.norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        raise UndefinedMetricError("undefined cosine for zero vector")
    value = float(np.dot(a / norm_a, b / norm_b))
    return max(-1.0, min(1.0, value))


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    xm, ym = x - x.mean(), y - y.mean()
    denom = np.sqrt(np.sum(xm * xm) * np.sum(ym * ym))
    return max(-1.0, min(1.0, float(np.sum(xm * ym) / denom)))


def spearman_correlation(a: Sequence[float], b: Sequence[float]) -> float:
    """Pearson correlation of average ranks (ties share their mean rank)."""
    a, b = _pair(a, b, 2)
    ranks_a = rankdata(a, method="average")
    ranks_b = rankdata(b, method="average")
    if np.all(ranks_a == ranks_a[0]) or np.all(ranks_b == ranks_b[0]):
        raise UndefinedMetricError("undefined correlation for constant vector")
    return _pearson(ranks_a, ranks_b)


def importance_from_attributions(runs: Sequence[Attribution], k: int) -> np.ndarray:
    """Mean over runs of |phi_i component k| for every feature i."""
    if not runs:
        raise GameValueError("need at least one attribution run")
    n, m = runs[0].n, runs[0].m
    if any((r.n, r.m) != (n, m) for r in runs):
        raise ShapeMismatchError("all runs must share (n, m)")
    if not 0 <= k < m:
        raise GameValueError(f"output index {k} out of range for m={m}")
    stacked = np.stack([np.abs(r.payoff[:, k]) for r in runs])
    return compensated_sum(stacked, axis=0) / len(runs)
