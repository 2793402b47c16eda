"""Order-preserving thread map. Numba kernels release the GIL, so threads scale."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor


def resolve_n_jobs(n_jobs: int | None) -> int:
    import os

    if n_jobs is None or n_jobs == 0:
        return 1
    if n_jobs < 0:
        return max(1, (os.cpu_count() or 1) + 1 + n_jobs)
    return int(n_jobs)


def parallel_map(fn, items, n_jobs: int | None = 1) -> list:
    """``[fn(x) for x in items]``, evaluated on up to ``n_jobs`` threads."""
    items = list(items)
    workers = min(resolve_n_jobs(n_jobs), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
