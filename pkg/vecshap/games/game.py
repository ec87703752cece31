"""Vector-valued cooperative games and attributions.

A game over n players with m outputs is stored densely: `values[mask]` is the
payoff vector of the coalition encoded by `mask`. Both games and
attributions are immutable once built.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import check_outputs, check_players
from ..errors import GameValueError, ShapeMismatchError
from ..utils.summation import compensated_sum
from .coalition import Coalition

logger = logging.getLogger(__name__)

MaskLike = Union[int, Coalition]


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


def _mask_of(mask: MaskLike) -> int:
    return mask.mask if isinstance(mask, Coalition) else int(mask)


@dataclass(frozen=True, eq=False)
class VectorGame:
    """Characteristic function S -> v(S) in R^m with v(empty) = 0."""

    n: int
    m: int
    values: np.ndarray

    def __post_init__(self):
        check_players(self.n)
        check_outputs(self.m)
        values = _frozen(self.values)
        if values.shape != (1 << self.n, self.m):
            raise ShapeMismatchError(
                f"value table has shape {values.shape}, expected {(1 << self.n, self.m)}"
            )
        if not np.all(np.isfinite(values)):
            raise GameValueError("game values must be finite")
        if np.any(values[0] != 0.0):
            raise GameValueError("empty coalition must have zero value")
        object.__setattr__(self, "values", values)

    @property
    def grand_mask(self) -> int:
        return (1 << self.n) - 1

    def value(self, mask: MaskLike) -> np.ndarray:
        return self.values[_mask_of(mask)]

    def grand_value(self) -> np.ndarray:
        return self.values[self.grand_mask]

    def same_shape(self, other: "VectorGame") -> bool:
        return self.n == other.n and self.m == other.m

    def equals(self, other: "VectorGame") -> bool:
        """Bitwise equality of the stored tables."""
        return self.same_shape(other) and np.array_equal(self.values, other.values)


@dataclass(frozen=True, eq=False)
class Attribution:
    """Per-player payoff vectors; row i is phi_i(v)."""

    n: int
    m: int
    payoff: np.ndarray

    def __post_init__(self):
        payoff = _frozen(self.payoff)
        if payoff.shape != (self.n, self.m):
            raise ShapeMismatchError(
                f"attribution has shape {payoff.shape}, expected {(self.n, self.m)}"
            )
        if not np.all(np.isfinite(payoff)):
            raise GameValueError("attribution components must be finite")
        object.__setattr__(self, "payoff", payoff)

    @classmethod
    def zeros(cls, n: int, m: int) -> "Attribution":
        return cls(n, m, np.zeros((n, m)))

    def row(self, i: int) -> np.ndarray:
        return self.payoff[i]

    def total(self) -> np.ndarray:
        """Sum of all rows (compensated)."""
        return compensated_sum(self.payoff, axis=0)

    def __sub__(self, other: "Attribution") -> "Attribution":
        if (self.n, self.m) != (other.n, other.m):
            raise ShapeMismatchError("attribution shapes differ")
        return Attribution(self.n, self.m, self.payoff - other.payoff)

    def __rmul__(self, scalar: float) -> "Attribution":
        return Attribution(self.n, self.m, float(scalar) * self.payoff)


def zero_game(n: int, m: int) -> VectorGame:
    return VectorGame(n, m, np.zeros((1 << n, m)))


def make_game(
    n: int,
    m: int,
    entries: Iterable[Tuple[MaskLike, Sequence[float]]] = (),
) -> VectorGame:
    """Dense game from sparse (mask, vector) entries; missing masks are zero."""
    check_players(n)
    check_outputs(m)
    values = np.zeros((1 << n, m))
    seen = set()
    for mask, vector in entries:
        mask = _mask_of(mask)
        if not 0 <= mask < (1 << n):
            raise GameValueError(f"mask {mask} out of range for n={n}")
        if mask in seen:
            raise GameValueError(f"duplicate entry for mask {mask}")
        seen.add(mask)
        vector = np.asarray(vector, dtype=np.float64).reshape(-1)
        if vector.shape != (m,):
            raise ShapeMismatchError(f"mask {mask}: expected {m} components, got {vector.shape[0]}")
        if not np.all(np.isfinite(vector)):
            raise GameValueError(f"mask {mask}: game values must be finite")
        if mask == 0 and np.any(vector != 0.0):
            raise GameValueError("empty coalition must have zero value")
        values[mask] = vector
    values[0] = 0.0
    return VectorGame(n, m, values)


def unanimity_game(n: int, T: MaskLike, k: int, m: int) -> VectorGame:
    """iota_k u_T: v(S) = e_k when T is a subset of S, zero otherwise."""
    check_players(n)
    check_outputs(m)
    t = _mask_of(T)
    if t == 0:
        raise GameValueError("unanimity game requires nonempty T")
    if not 0 < t < (1 << n):
        raise GameValueError(f"mask {t} out of range for n={n}")
    if not 0 <= k < m:
        raise GameValueError(f"output index {k} out of range for m={m}")
    masks = np.arange(1 << n, dtype=np.int64)
    values = np.zeros((1 << n, m))
    values[(masks & t) == t, k] = 1.0
    return VectorGame(n, m, values)


def coordinate_project(v: VectorGame, k: int) -> VectorGame:
    """pi_k v: the scalar game of output k."""
    if not 0 <= k < v.m:
        raise GameValueError(f"output index {k} out of range for m={v.m}")
    return VectorGame(v.n, 1, v.values[:, k:k + 1])


def coordinate_embed(g: VectorGame, k: int, m: int) -> VectorGame:
    """iota_k g: (iota_k g)(S) = g(S) e_k."""
    if g.m != 1:
        raise ShapeMismatchError(f"coordinate_embed expects a scalar game, got m={g.m}")
    check_outputs(m)
    if not 0 <= k < m:
        raise GameValueError(f"output index {k} out of range for m={m}")
    values = np.zeros((1 << g.n, m))
    values[:, k] = g.values[:, 0]
    return VectorGame(g.n, m, values)


def game_combine(a: float, u: VectorGame, b: float, v: VectorGame) -> VectorGame:
    """a*u + b*v, coalition by coalition."""
    if not u.same_shape(v):
        raise ShapeMismatchError(f"games differ in shape: (n={u.n}, m={u.m}) vs (n={v.n}, m={v.m})")
    if not (np.isfinite(a) and np.isfinite(b)):
        raise GameValueError("combination coefficients must be finite")
    return VectorGame(u.n, u.m, float(a) * u.values + float(b) * v.values)


def game_difference(u: VectorGame, v: VectorGame) -> VectorGame:
    return game_combine(1.0, u, -1.0, v)


def relabel_game(v: VectorGame, perm: Sequence[int]) -> VectorGame:
    """Rename player i to perm[i]; the table is permuted exactly."""
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(v.n)):
        raise GameValueError(f"{perm} is not a permutation of 0..{v.n - 1}")
    masks = np.arange(1 << v.n, dtype=np.int64)
    relabeled = np.zeros_like(masks)
    for i, p in enumerate(perm):
        relabeled |= ((masks >> i) & 1) << p
    values = np.empty_like(v.values)
    values[relabeled] = v.values
    return VectorGame(v.n, v.m, values)


def random_game(n: int, m: int, rng: Optional[np.random.Generator] = None) -> VectorGame:
    """Nonempty coalition values i.i.d. uniform on [-1, 1] per component."""
    rng = rng if rng is not None else np.random.default_rng()
    check_players(n)
    check_outputs(m)
    values = rng.uniform(-1.0, 1.0, size=(1 << n, m))
    values[0] = 0.0
    return VectorGame(n, m, values)
