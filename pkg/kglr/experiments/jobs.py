from __future__ import annotations

import logging
from multiprocessing import Pool
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

logger = logging.getLogger(__name__)


def run_jobs[T, R](
    worker: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
) -> list[R]:
    """Map ``worker`` over ``items``, results in input order.

    With ``jobs > 1`` the items are spread over a process pool; ``worker``
    must then be picklable (a module-level function or a ``partial`` of one).
    """
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]

    processes = min(jobs, len(items))
    logger.debug(f"running {len(items)} sweep points on {processes} processes")
    with Pool(processes=processes) as pool:
        return pool.map(worker, items, chunksize=1)
