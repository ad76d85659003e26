"""Worker pool used by the pipelines.

Work is split into independent units by the calling module; the pool only
decides where they run. Results always come back in submission order, so
the merge step (and every reduction downstream of it) sees the same
sequence whatever the worker count.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """Ordered ``map`` over a process or thread pool; serial when workers == 1."""

    def __init__(self, workers: int = 1, kind: str = "process"):
        if kind not in {"process", "thread"}:
            raise ValueError(f"unknown pool kind {kind!r}")
        self.workers = max(1, int(workers))
        self.kind = kind
        self._executor: Executor | None = None

    def __enter__(self) -> "WorkerPool":
        if self.workers > 1:
            factory = ProcessPoolExecutor if self.kind == "process" else ThreadPoolExecutor
            self._executor = factory(max_workers=self.workers)
            logger.debug("Started {} pool with {} workers", self.kind, self.workers)
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        items = list(items)
        if self._executor is None or len(items) <= 1:
            return [fn(item) for item in items]
        return list(self._executor.map(fn, items))


def serial_pool() -> WorkerPool:
    return WorkerPool(workers=1)
