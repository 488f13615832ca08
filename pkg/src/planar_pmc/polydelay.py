"""Exactly-once union of overlapping polynomial-delay generators.

Each element is emitted only by its *owner*, the largest index whose family
contains it. When a sub-generator produces an element that a later family
also contains, the output is suppressed and control jumps to the next live
sub-generator above; after every emission or termination, control drops back
to the smallest live index. This bounds the number of suppressed outputs
between two emissions by the number of sub-generators times the number of
terminations in between.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Generic, Iterable, Iterator, Sequence, TypeVar

from .meter import WorkMeter

T = TypeVar("T")


@dataclass
class UnionStats:
    """Scheduler counters, all maintained on every run.

    ``sigma[i]``: outputs of generator ``i`` that were suppressed.
    ``epsilon[i]``: emitted elements that belong to family ``i`` but are owned
    by a larger index.
    """

    n_generators: int = 0
    emitted: int = 0
    events: int = 0
    terminations: int = 0
    sigma: list[int] = field(default_factory=list)
    epsilon: list[int] = field(default_factory=list)
    emitted_by: list[int] = field(default_factory=list)
    events_between: list[int] = field(default_factory=list)
    terminations_between: list[int] = field(default_factory=list)
    loop_heads: int = 0
    invariant_violations: int = 0
    suppressions_without_live_successor: int = 0

    @property
    def suppressed(self) -> int:
        return sum(self.sigma)

    def delay_bound_holds(self) -> bool:
        """Events between emissions never exceed ``N * (terminations + 1)``."""
        n = max(self.n_generators, 1)
        return all(e <= n * (t + 1) for e, t in zip(self.events_between, self.terminations_between))


class _Sub(Generic[T]):
    __slots__ = ("it", "done")

    def __init__(self, source: Iterable[T]) -> None:
        self.it = iter(source)
        self.done = False


def union_generate(
    gens: Sequence[Iterable[T]],
    member: Callable[[T, int], bool],
    stats: UnionStats | None = None,
    meter: WorkMeter | None = None,
    check_invariants: bool = False,
) -> Iterator[T]:
    """Yield every element of the union of the families exactly once.

    Parameters
    ----------
    gens:
        One iterable per family; ``iter`` is called on each up front and the
        resulting iterators are only advanced on demand.
    member:
        ``member(s, i)`` decides whether ``s`` belongs to family ``i``
        (0-based). It must be exact for the elements generators produce.
    stats:
        Optional counters object, filled in as the stream is consumed.
    check_invariants:
        Also verify ``epsilon[i] <= sigma[i]`` for every ``i`` at each loop
        head; violations are counted in ``stats.invariant_violations``.
    """
    if stats is None:
        stats = UnionStats()
    n = len(gens)
    stats.n_generators = n
    stats.sigma = [0] * n
    stats.epsilon = [0] * n
    subs = [_Sub(g) for g in gens]
    live = list(range(n))  # ascending indices of non-terminated generators

    def next_live(after: int) -> int | None:
        for j in live:
            if j > after:
                return j
        return None

    events_since = 0
    terms_since = 0
    i_star = 0
    while live:
        ascending = True
        while ascending:
            stats.loop_heads += 1
            if check_invariants and any(e > s for e, s in zip(stats.epsilon, stats.sigma)):
                stats.invariant_violations += 1
            sub = subs[i_star]
            stats.events += 1
            events_since += 1
            if meter is not None:
                meter.tick()
            try:
                s = next(sub.it)
            except StopIteration:
                sub.done = True
                live.remove(i_star)
                stats.terminations += 1
                terms_since += 1
                ascending = False
                continue
            owned_above = False
            for j in range(i_star + 1, n):
                if meter is not None:
                    meter.tick()
                if member(s, j):
                    owned_above = True
                    break
            if owned_above:
                stats.sigma[i_star] += 1
                j = next_live(i_star)
                if j is None:
                    # cannot happen when ``member`` is exact
                    stats.suppressions_without_live_successor += 1
                    raise RuntimeError(
                        f"output of generator {i_star} suppressed but no live successor exists"
                    )
                i_star = j
            else:
                for j in range(i_star):
                    if meter is not None:
                        meter.tick()
                    if member(s, j):
                        stats.epsilon[j] += 1
                stats.emitted += 1
                stats.emitted_by.append(i_star)
                stats.events_between.append(events_since)
                stats.terminations_between.append(terms_since)
                events_since = 0
                terms_since = 0
                ascending = False
                yield s
        if live:
            i_star = live[0]
