"""Thread pool helper for independent work units."""

import concurrent.futures
import logging
from typing import Callable, Iterable, List, Optional, TypeVar

from ..config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int] = None) -> int:
    """Explicit worker count, else the configured default (at least 1)."""
    if workers is None:
        workers = get_settings().workers
    return max(1, int(workers))


def map_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: Optional[int] = None,
) -> List[R]:
    """Apply fn to every item, returning results in input order.

    Each item must be an independent unit of work; partitioning never
    changes the per-item result.
    """
    items = list(items)
    workers = resolve_workers(workers)
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        logger.debug(f"[workers] dispatching {len(items)} units over {workers} threads")
        return list(executor.map(fn, items))
