"""Compensated summation built on the TwoSum error-free transformation.

Every reduction in the engine goes through here with a fixed association
order, so results are reproducible regardless of how work is split across
threads.
"""

from typing import Tuple

import numpy as np


def two_sum(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Return (s, e) with a + b == s + e exactly; s is the rounded sum."""
    s = a + b
    bp = s - a
    ap = s - bp
    e = (a - ap) + (b - bp)
    return s, e


def compensated_sum(values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum along `axis` with a cascaded pairwise TwoSum reduction.

    Pairs are combined level by level (like a tree reduction); the rounding
    error of every level is kept and folded back in at the end. The result is
    close to what summing in twice the working precision would give.
    """
    x = np.moveaxis(np.asarray(values, dtype=np.float64), axis, 0)
    count = x.shape[0]
    if count == 0:
        return np.zeros(x.shape[1:], dtype=np.float64)

    size = 1
    while size < count:
        size <<= 1
    if size != count:
        pad = np.zeros((size - count,) + x.shape[1:], dtype=np.float64)
        x = np.concatenate([x, pad], axis=0)

    err = np.zeros(x.shape[1:], dtype=np.float64)
    while x.shape[0] > 1:
        x, e = two_sum(x[0::2], x[1::2])
        err = err + e.sum(axis=0)
    return x[0] + err


class CompensatedAccumulator:
    """Streaming Neumaier-style accumulator for arrays of a fixed shape."""

    def __init__(self, shape):
        self.total = np.zeros(shape, dtype=np.float64)
        self.error = np.zeros(shape, dtype=np.float64)

    def add(self, value: np.ndarray) -> None:
        self.total, e = two_sum(self.total, np.asarray(value, dtype=np.float64))
        self.error += e

    def result(self) -> np.ndarray:
        return self.total + self.error
