"""Steering recognition and the steering-based PMC test.

A graph ``H`` is an ``(S, P)``-steering when ``H[S]`` is a cycle, the
attachment ``N_H(P)`` on that cycle is neither empty nor a slot (a single
vertex or a cycle edge), and, if ``|P| >= 2``, ``H[P]`` is a path whose
internal vertices avoid ``S`` and whose two ends each attach at a slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

from .graph import Graph
from .latching import LatchingGraph, is_plane_induced


@dataclass(frozen=True)
class SteeringCertificate:
    S: tuple[int, ...]
    """The cycle ``H[S]`` in cyclic order."""
    P: tuple[int, ...]
    """The path ``H[P]`` in path order; a single vertex for wheels."""

    @property
    def wheel(self) -> bool:
        return len(self.P) == 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.S) | frozenset(self.P)


def is_slot(cycle: Sequence[int], r: AbstractSet[int]) -> bool:
    """Whether ``r`` is a single vertex or two consecutive vertices of ``cycle``."""
    r = frozenset(r)
    if not r <= frozenset(cycle):
        return False
    if len(r) == 1:
        return True
    if len(r) != 2:
        return False
    k = len(cycle)
    a, b = sorted(cycle.index(v) for v in r)
    return b - a == 1 or (a == 0 and b == k - 1)


def cycle_order(h: Graph, vs: AbstractSet[int]) -> tuple[int, ...] | None:
    """Cyclic order of ``h[vs]`` if it is a cycle, else ``None``.

    Starts at the minimum vertex and continues to its smaller neighbour.
    """
    vs = frozenset(vs)
    if len(vs) < 3:
        return None
    if any(len(h.neighbors(v) & vs) != 2 for v in vs):
        return None
    start = min(vs)
    prev, cur = start, min(h.neighbors(start) & vs)
    order = [start]
    while cur != start:
        order.append(cur)
        a, b = h.neighbors(cur) & vs
        prev, cur = cur, (b if a == prev else a)
    return tuple(order) if len(order) == len(vs) else None


def _is_induced_path(h: Graph, path: Sequence[int]) -> bool:
    ps = frozenset(path)
    if len(ps) != len(path):
        return False
    for i, v in enumerate(path):
        expected = {path[j] for j in (i - 1, i + 1) if 0 <= j < len(path)}
        if h.neighbors(v) & ps != expected:
            return False
    return True


def _slot_on(h: Graph, r: AbstractSet[int]) -> bool:
    # on an induced cycle, two vertices are consecutive iff adjacent
    if len(r) == 1:
        return True
    if len(r) == 2:
        a, b = r
        return h.has_edge(a, b)
    return False


def check_certificate(h: Graph, cert: SteeringCertificate) -> bool:
    """Verify every steering condition for the bipartition in ``cert``."""
    S, P = cert.S, cert.P
    ss, ps = frozenset(S), frozenset(P)
    if len(ss) != len(S) or len(ps) != len(P) or ss & ps:
        return False
    if ss | ps != h.vertex_set() or not P:
        return False
    order = cycle_order(h, ss)
    if order is None:
        return False
    k = len(S)
    if any(not h.has_edge(S[i], S[(i + 1) % k]) for i in range(k)):
        return False
    attach = frozenset().union(*(h.neighbors(p) for p in P)) & ss
    if not attach or _slot_on(h, attach):
        return False
    if len(P) >= 2:
        if not _is_induced_path(h, P):
            return False
        if any(h.neighbors(p) & ss for p in P[1:-1]):
            return False
        for t in (P[0], P[-1]):
            if not _slot_on(h, h.neighbors(t) & ss):
                return False
    return True


def _canonical_path(path: Sequence[int]) -> tuple[int, ...]:
    return tuple(path) if path[0] <= path[-1] else tuple(reversed(path))


def steering_certificates(h: Graph) -> list[SteeringCertificate]:
    """All valid ``(S, P)`` bipartitions of ``h``.

    Wheel candidates are vertices whose removal leaves a cycle. For
    ``|P| >= 2`` every internal path vertex has degree exactly two in ``h``,
    so candidate paths are grown from each end through degree-two vertices.

    Two degree facts prune the search. Outside the hub, a wheel's vertices of
    degree three or more are all hub neighbours. A steering with
    ``|P| >= 2`` has maximum degree four and at most six vertices of degree
    three or more (the attached cycle vertices and the path ends), and both
    path ends are adjacent to one of them.
    """
    verts = h.vertex_set()
    found: dict[tuple[int, ...], SteeringCertificate] = {}

    def consider(P: tuple[int, ...]) -> None:
        if P in found:
            return
        order = cycle_order(h, verts - frozenset(P))
        if order is None:
            return
        cert = SteeringCertificate(order, P)
        if check_certificate(h, cert):
            found[P] = cert

    if len(verts) < 4:
        return []
    high = frozenset(v for v in verts if h.degree(v) >= 3)
    for v in sorted(verts):
        if high - {v} <= h.neighbors(v):
            consider((v,))
    if len(high) <= 6 and all(h.degree(v) <= 4 for v in high):
        ends = frozenset().union(*(h.neighbors(v) for v in high)) if high else frozenset()
        for t in sorted(ends):
            if h.degree(t) > 3:
                continue
            for w in sorted(h.neighbors(t)):
                path = [t]
                prev, cur = t, w
                while cur not in path:
                    path.append(cur)
                    if cur in ends:
                        consider(_canonical_path(path))
                    if h.degree(cur) != 2:
                        break
                    a, b = h.neighbors(cur)
                    prev, cur = cur, (b if a == prev else a)
    return [found[k] for k in sorted(found, key=lambda p: tuple(sorted(p)))]


def find_certificate(h: Graph) -> SteeringCertificate | None:
    """A steering certificate with lexicographically smallest sorted ``P``."""
    certs = steering_certificates(h)
    return certs[0] if certs else None


def is_steering(h: Graph) -> bool:
    return find_certificate(h) is not None


def is_pmc_by_steering(l: LatchingGraph, x: Iterable[int]) -> bool:
    """PMC test for triconnected plane graphs: ``L[x]`` is plane and a steering."""
    x = frozenset(x)
    if len(x) < 4 or not is_plane_induced(l, x):
        return False
    return find_certificate(l.induced(x)) is not None
