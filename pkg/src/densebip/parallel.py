"""Deterministic fan-out of indexed trials across worker processes.

Results are yielded in index order and each trial depends only on its index,
so the outcome is identical for any worker count. Workers receive the shared
arguments once (via the pool initializer) and tasks carry only indices.
"""

from __future__ import annotations

import concurrent.futures as cf
from typing import Any, Callable, Iterator

_WORK: tuple[Callable, Any] | None = None


def _init_worker(fn: Callable, args: Any) -> None:
    global _WORK
    _WORK = (fn, args)


def _run_index(index: int):
    fn, args = _WORK  # type: ignore[misc]
    return fn(args, index)


def iter_indexed(
    fn: Callable[[Any, int], Any],
    args: Any,
    count: int,
    workers: int = 1,
    block: int | None = None,
) -> Iterator[tuple[int, Any]]:
    """Yield (index, fn(args, index)) for index in range(count), in order.

    With workers > 1, indices are dispatched to a process pool in blocks, so a
    consumer that stops early wastes at most one block of extra trials. `fn`
    must be a picklable module-level function.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if workers <= 1 or count <= 1:
        for i in range(count):
            yield i, fn(args, i)
        return
    block = block or max(32, workers * 8)
    with cf.ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(fn, args)
    ) as pool:
        for start in range(0, count, block):
            indices = range(start, min(start + block, count))
            chunk = max(1, len(indices) // (workers * 2))
            yield from zip(indices, pool.map(_run_index, indices, chunksize=chunk))
