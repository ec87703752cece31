"""Exact vector-valued Shapley operator.

The subset (combinatorial) formula is the production path. The permutation
formula and the unanimity-basis (Harsanyi dividend) route are independent
oracles for it.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Optional

import numpy as np

from ..config import PERMUTATION_CAP, UNANIMITY_CAP, check_players
from ..errors import CapExceededError, GameValueError, ShapeMismatchError
from ..games import (
    Attribution,
    VectorGame,
    coalition_sizes,
    coordinate_project,
    player_marginals,
)
from ..utils.summation import CompensatedAccumulator, compensated_sum
from ..utils.workers import map_ordered

logger = logging.getLogger(__name__)

Engine = Literal["subset", "permutation", "unanimity"]

# permutations processed per vectorized batch in the oracle
PERMUTATION_BATCH = 5040


@dataclass(frozen=True, eq=False)
class ShapleyWeightTable:
    """w[s] = s!(n-s-1)!/n!, the weight of a size-s coalition not containing i."""

    n: int
    w: np.ndarray

    @classmethod
    def build(cls, n: int) -> "ShapleyWeightTable":
        check_players(n)
        w = np.empty(n, dtype=np.float64)
        w[0] = 1.0 / n
        for s in range(n - 1):
            w[s + 1] = w[s] * (s + 1) / (n - s - 1)
        w.setflags(write=False)
        return cls(n, w)

    def total(self) -> float:
        """sum_s C(n-1, s) w[s]; one up to rounding."""
        terms = np.array([math.comb(self.n - 1, s) * self.w[s] for s in range(self.n)])
        return float(compensated_sum(terms))


@lru_cache(maxsize=32)
def shapley_weights(n: int) -> ShapleyWeightTable:
    return ShapleyWeightTable.build(n)


def coalition_weight(s: int, n: int) -> float:
    """s!(n-s-1)!/n! via the multiplicative recurrence (no factorials)."""
    if n < 1:
        raise GameValueError(f"player count must be >= 1, got {n}")
    if not 0 <= s <= n - 1:
        raise GameValueError(f"coalition size {s} out of range for n={n}")
    return float(shapley_weights(n).w[s])


def _subset_row(v: VectorGame, i: int) -> np.ndarray:
    masks, diffs = player_marginals(v, i)
    weights = shapley_weights(v.n).w[coalition_sizes(v.n)[masks]]
    return compensated_sum(diffs * weights[:, None], axis=0)


def shapley_subset(v: VectorGame, workers: Optional[int] = None) -> Attribution:
    """phi_i(v) = sum_{S without i} w(|S|) [v(S+i) - v(S)], all outputs at once."""
    rows = map_ordered(lambda i: _subset_row(v, i), range(v.n), workers)
    return Attribution(v.n, v.m, np.vstack(rows))


def shapley_permutation(v: VectorGame) -> Attribution:
    """Average of marginal contributions over all n! player orderings."""
    if v.n > PERMUTATION_CAP:
        raise CapExceededError(f"permutation oracle capped at n={PERMUTATION_CAP}")
    n = v.n
    bits = np.int64(1) << np.arange(n, dtype=np.int64)
    acc = CompensatedAccumulator((n, v.m))
    orderings = itertools.permutations(range(n))
    while True:
        batch = list(itertools.islice(orderings, PERMUTATION_BATCH))
        if not batch:
            break
        perms = np.asarray(batch, dtype=np.int64)
        # mask of players preceding each position
        position_bits = bits[perms]
        preceding = np.cumsum(position_bits, axis=1) - position_bits
        positions = np.argsort(perms, axis=1)
        before = np.take_along_axis(preceding, positions, axis=1)
        marginals = v.values[before | bits[None, :]] - v.values[before]
        acc.add(compensated_sum(marginals, axis=0))
    return Attribution(n, v.m, acc.result() / math.factorial(n))


def _check_unanimity_cap(n: int) -> None:
    if n > UNANIMITY_CAP:
        raise CapExceededError(f"dividend transform capped at n={UNANIMITY_CAP}")


def harsanyi_dividends(v: VectorGame) -> VectorGame:
    """Moebius transform: d_T = sum_{R subset T} (-1)^{|T|-|R|} v(R)."""
    _check_unanimity_cap(v.n)
    d = np.array(v.values, copy=True)
    for i in range(v.n):
        bit = 1 << i
        blocks = d.reshape(-1, 2, bit, v.m)
        blocks[:, 1] -= blocks[:, 0]
    return VectorGame(v.n, v.m, d)


def game_from_dividends(dividends: VectorGame) -> VectorGame:
    """Zeta transform: v(S) = sum_{T subset S} d_T, i.e. v = sum_T d_T u_T."""
    _check_unanimity_cap(dividends.n)
    values = np.array(dividends.values, copy=True)
    for i in range(dividends.n):
        bit = 1 << i
        blocks = values.reshape(-1, 2, bit, dividends.m)
        blocks[:, 1] += blocks[:, 0]
    return VectorGame(dividends.n, dividends.m, values)


def shapley_via_unanimity(v: VectorGame) -> Attribution:
    """phi_i = sum_{T containing i} d_T / |T| for a scalar game."""
    if v.m != 1:
        raise ShapeMismatchError(f"dividend path expects a scalar game, got m={v.m}")
    _check_unanimity_cap(v.n)
    d = harsanyi_dividends(v).values[:, 0]
    sizes = coalition_sizes(v.n)
    masks = np.arange(1 << v.n, dtype=np.int64)
    shares = np.zeros_like(d)
    shares[1:] = d[1:] / sizes[1:]
    rows = [compensated_sum(shares[(masks >> i) & 1 == 1]) for i in range(v.n)]
    return Attribution(v.n, 1, np.asarray(rows, dtype=np.float64).reshape(v.n, 1))


def shapley_value(v: VectorGame, engine: Engine = "subset", workers: Optional[int] = None) -> Attribution:
    """Dispatch to one of the three equivalent formulas."""
    logger.debug(f"[shapley] engine={engine} n={v.n} m={v.m}")
    if engine == "subset":
        return shapley_subset(v, workers)
    if engine == "permutation":
        return shapley_permutation(v)
    if engine == "unanimity":
        columns = [shapley_via_unanimity(coordinate_project(v, k)).payoff for k in range(v.m)]
        return Attribution(v.n, v.m, np.hstack(columns))
    raise GameValueError(f"unknown engine {engine!r}")
