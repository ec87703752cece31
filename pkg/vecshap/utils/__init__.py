"""Utility modules."""

from .summation import CompensatedAccumulator, compensated_sum, two_sum
from .workers import map_ordered

__all__ = ["CompensatedAccumulator", "compensated_sum", "two_sum", "map_ordered"]
