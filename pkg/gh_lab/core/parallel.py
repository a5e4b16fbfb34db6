"""
Chunked parallel execution.

Jobs run on a thread pool (numpy releases the GIL in the heavy kernels);
results always come back in submission order so reductions are deterministic.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from gh_lab.core.config import get_settings

T = TypeVar("T")
R = TypeVar("R")


def map_chunks(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Apply `func` to every item, in parallel when more than one worker is allowed.

    Args:
        func: Pure job function
        items: Job inputs
        threads: Worker cap (defaults to GH_LAB_THREADS)

    Returns:
        Results in the order of `items`
    """
    jobs = list(items)
    workers = threads if threads is not None else get_settings().threads
    workers = max(1, min(workers, len(jobs)))

    if workers == 1:
        return [func(job) for job in jobs]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, jobs))


__all__ = ["map_chunks"]
