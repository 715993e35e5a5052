"""Order-preserving parallel map.  Worker count comes from NCX_THREADS."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

# below this many items the pool start-up costs more than it saves
MIN_PARALLEL = 64


def thread_count() -> int:
    raw = os.environ.get("NCX_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"NCX_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"NCX_THREADS must be a positive integer, got {raw!r}")
    return value


def map_ordered(fn, items, workers: int | None = None, chunksize: int = 16) -> list:
    """list(map(fn, items)), possibly spread over processes; results keep input order."""
    items = list(items)
    workers = thread_count() if workers is None else workers
    if workers <= 1 or len(items) < MIN_PARALLEL:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
