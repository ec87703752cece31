"""Norms on games and attributions used by the stability bounds."""

from typing import Optional, Tuple

import numpy as np

from ..utils.workers import map_ordered
from .game import Attribution, VectorGame


def sup_norm(v: VectorGame) -> float:
    """||v||_{G,inf} = max_S ||v(S)||_inf."""
    return float(np.max(np.abs(v.values)))


def player_marginals(v: VectorGame, i: int) -> Tuple[np.ndarray, np.ndarray]:
    """(S, v(S+i) - v(S)) for every S not containing i, masks ascending."""
    bit = 1 << i
    blocks = v.values.reshape(-1, 2, bit, v.m)
    diffs = (blocks[:, 1] - blocks[:, 0]).reshape(-1, v.m)
    masks = np.arange(1 << v.n, dtype=np.int64).reshape(-1, 2, bit)[:, 0].reshape(-1)
    return masks, diffs


def _player_marginal_max(v: VectorGame, i: int) -> Tuple[float, int, int]:
    masks, diffs = player_marginals(v, i)
    flat = np.abs(diffs)
    idx = int(np.argmax(flat))
    row, k = divmod(idx, v.m)
    return float(flat[row, k]), int(masks[row]), k


def marginal_seminorm_witness(
    v: VectorGame,
    workers: Optional[int] = None,
) -> Tuple[float, int, int, int]:
    """Exact ||v||_{Delta,inf} plus the (i, S, k) that attains it."""
    per_player = map_ordered(lambda i: _player_marginal_max(v, i), range(v.n), workers)
    best_i = max(range(v.n), key=lambda i: (per_player[i][0], -i))
    value, mask, k = per_player[best_i]
    return value, best_i, mask, k


def marginal_seminorm(v: VectorGame, workers: Optional[int] = None) -> float:
    """||v||_{Delta,inf} = max_i max_{S without i} ||v(S+i) - v(S)||_inf."""
    return marginal_seminorm_witness(v, workers)[0]


def attribution_norm(a: Attribution) -> float:
    """||a||_{A,inf} = max_i ||a_i||_inf."""
    return float(np.max(np.abs(a.payoff)))
