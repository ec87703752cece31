"""Coalitions as bit masks over the player set {0, ..., n-1}."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List

import numpy as np

from ..config import MAX_PLAYERS, check_players
from ..errors import GameValueError


@lru_cache(maxsize=MAX_PLAYERS + 1)
def coalition_sizes(n: int) -> np.ndarray:
    """Popcount of every mask in [0, 2^n), built by doubling."""
    check_players(n)
    sizes = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        sizes[bit:2 * bit] = sizes[:bit] + 1
    sizes.setflags(write=False)
    return sizes


def masks_without(n: int, i: int) -> np.ndarray:
    """All masks S with player i not in S, ascending."""
    masks = np.arange(1 << n, dtype=np.int64)
    return masks[(masks >> i) & 1 == 0]


@dataclass(frozen=True)
class Coalition:
    """A subset S of [n]; bit i of mask set iff player i is in S."""

    mask: int
    n: int

    def __post_init__(self):
        check_players(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise GameValueError(f"mask {self.mask} out of range for n={self.n}")

    @classmethod
    def from_players(cls, players: Iterable[int], n: int) -> "Coalition":
        mask = 0
        for p in players:
            if not 0 <= p < n:
                raise GameValueError(f"player {p} out of range for n={n}")
            mask |= 1 << p
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "Coalition":
        return cls(0, n)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls((1 << n) - 1, n)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def players(self) -> List[int]:
        return [i for i in range(self.n) if (self.mask >> i) & 1]

    def contains(self, i: int) -> bool:
        return bool((self.mask >> i) & 1)

    def is_subset(self, other: "Coalition") -> bool:
        return self.mask & other.mask == self.mask

    def union(self, other: "Coalition") -> "Coalition":
        if other.n != self.n:
            raise GameValueError("coalitions over different player sets")
        return Coalition(self.mask | other.mask, self.n)

    def complement(self) -> "Coalition":
        return Coalition(((1 << self.n) - 1) ^ self.mask, self.n)

    def __len__(self) -> int:
        return self.size

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.players()) + "}"
