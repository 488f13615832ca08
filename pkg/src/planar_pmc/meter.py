"""Work counter used to measure enumeration delay in elementary steps."""

from __future__ import annotations


class WorkMeter:
    """Counts elementary steps and records the gap between emissions.

    Generators call :meth:`tick` for each unit of work (a vertex popped in a
    search, a recursion node, a scheduler event). The consumer calls
    :meth:`mark` whenever an element is emitted; the steps since the previous
    mark are appended to :attr:`gaps`.
    """

    __slots__ = ("ticks", "_last", "gaps")

    def __init__(self) -> None:
        self.ticks = 0
        self._last = 0
        self.gaps: list[int] = []

    def tick(self, k: int = 1) -> None:
        self.ticks += k

    def mark(self) -> int:
        gap = self.ticks - self._last
        self.gaps.append(gap)
        self._last = self.ticks
        return gap

    def finish(self) -> None:
        """Record the gap from the last emission to termination."""
        self.mark()

    @property
    def max_gap(self) -> int:
        return max(self.gaps, default=0)
