"""Polynomial-delay enumeration of chordless paths and chordless cycles.

Paths are grown one vertex at a time. A vertex may join the path only if
it is adjacent to the current end and to no earlier path vertex. Before a
branch is entered, a breadth-first search checks that the target is still
reachable while avoiding the closed neighbourhood of the path so far; the
shortest such continuation is itself chordless, so every branch that is
entered produces at least one path. Each output therefore costs at most
``depth * degree`` searches.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import AbstractSet, Iterator

from .graph import Graph
from .meter import WorkMeter


def _reachable(g: Graph, src: int, dst: int, allowed: AbstractSet[int],
               blocked: AbstractSet[int], meter: WorkMeter | None) -> bool:
    """BFS from ``src`` to ``dst`` through ``allowed - blocked``."""
    seen = {src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if meter is not None:
            meter.tick()
        for w in g.neighbors(v):
            if w == dst:
                return True
            if w in allowed and w not in blocked and w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def _paths(g: Graph, s: int, t: int, allowed: AbstractSet[int],
           meter: WorkMeter | None) -> Iterator[tuple[int, ...]]:
    if s not in allowed or t not in allowed:
        return
    if not _reachable(g, s, t, allowed, frozenset([s]), meter):
        return

    def extend(path: list[int], blocked: frozenset[int]) -> Iterator[tuple[int, ...]]:
        # blocked = closed neighbourhood of path[:-1]
        v = path[-1]
        if meter is not None:
            meter.tick()
        nxt_blocked = blocked | g.neighbors(v) | {v}
        for w in sorted(g.neighbors(v)):
            if w not in allowed or w in blocked:
                continue
            if w == t:
                path.append(t)
                yield tuple(path)
                path.pop()
                continue
            if t in nxt_blocked:
                continue
            if not _reachable(g, w, t, allowed, nxt_blocked, meter):
                continue
            path.append(w)
            yield from extend(path, nxt_blocked)
            path.pop()

    yield from extend([s], frozenset())


def chordless_paths(g: Graph, s: int, t: int, meter: WorkMeter | None = None,
                    allowed: AbstractSet[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every chordless ``s``-``t`` path once, as a vertex tuple from ``s``.

    ``allowed`` optionally restricts the search to an induced subgraph.
    """
    if s == t:
        raise ValueError("chordless_paths needs distinct end vertices")
    if allowed is None:
        allowed = g.vertex_set()
    yield from _paths(g, s, t, allowed, meter)


def chordless_cycles(g: Graph, meter: WorkMeter | None = None,
                     allowed: AbstractSet[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every chordless cycle once, in canonical rotation.

    A cycle is reported starting at its minimum vertex ``u`` and continuing
    to the smaller of ``u``'s two cycle neighbours. It decomposes uniquely
    as ``u`` plus a chordless path between those neighbours ``a < b`` that
    uses only vertices larger than ``u`` and not adjacent to ``u``.
    """
    verts = g.vertex_set() if allowed is None else frozenset(allowed) & g.vertex_set()
    for u in sorted(verts):
        nbrs = sorted(w for w in g.neighbors(u) if w in verts and w > u)
        if len(nbrs) < 2:
            continue
        later = frozenset(w for w in verts if w > u)
        closed = g.neighbors(u)
        for a, b in combinations(nbrs, 2):
            if meter is not None:
                meter.tick()
            if g.has_edge(a, b):
                yield (u, a, b)
                continue
            region = (later - closed) | {a, b}
            for p in _paths(g, a, b, region, meter):
                yield (u,) + p


def is_chordless_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    vs = frozenset(cycle)
    if any(not g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)):
        return False
    return all(len(g.neighbors(v) & vs) == 2 for v in cycle)


def is_chordless_path(g: Graph, path: tuple[int, ...]) -> bool:
    k = len(path)
    if k < 1 or len(set(path)) != k:
        return False
    if any(not g.has_edge(path[i], path[i + 1]) for i in range(k - 1)):
        return False
    vs = frozenset(path)
    return sum(len(g.neighbors(v) & vs) for v in path) == 2 * (k - 1)
