"""Cooperative wall-clock deadlines checked between pipeline stages."""
from __future__ import annotations

import time
from typing import Callable, Optional

from .errors import QueryTimeout

Clock = Callable[[], float]


class Deadline:
    """A budget of ``timeout_s`` seconds measured on ``clock`` from construction.

    ``timeout_s=None`` never expires.
    """

    def __init__(self, timeout_s: Optional[float] = None, clock: Clock = time.perf_counter):
        if timeout_s is not None and timeout_s <= 0:
            raise ValueError("timeout_s must be positive")
        self.timeout_s = timeout_s
        self.clock = clock
        self.started = clock()

    def elapsed(self) -> float:
        return self.clock() - self.started

    def expired(self) -> bool:
        return self.timeout_s is not None and self.elapsed() > self.timeout_s

    def check(self) -> None:
        if self.timeout_s is None:
            return
        elapsed = self.elapsed()
        if elapsed > self.timeout_s:
            raise QueryTimeout(self.timeout_s, elapsed)


def frozen_clock() -> float:
    """Clock that never advances; makes recorded runtimes reproducible."""
    return 0.0
