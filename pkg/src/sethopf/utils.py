"""Small shared helpers."""

from __future__ import annotations

import os
from typing import Callable, Sequence


def thread_cap() -> int:
    """Parallelism cap from SPECIES_HOPF_THREADS (default 1 = sequential)."""
    raw = os.environ.get("SPECIES_HOPF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Map preserving input order; fans out over threads when capped above 1.

    Results are assembled in input order, so output is deterministic
    regardless of scheduling.
    """
    cap = thread_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=cap) as pool:
        return list(pool.map(fn, items))
