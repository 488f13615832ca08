"""Polynomial-delay generation of the potential maximal cliques of a
triconnected plane graph.

Every PMC ``X`` either induces a plane ``K4`` in the latching graph, or has a
component ``C`` of ``G - X`` whose separator ``S = N(C)`` has at least four
vertices. In the second case ``X = S + P`` for some ``P`` inside the opposite
full component ``C'``, and ``L[X]`` is one of

* a wheel centred at a single vertex of ``C'``;
* an ``(S, P)``-steering, ``P`` a chordless path between a valid pair of ports;
* a wheel centred at a hinge ``s`` of ``S``, ``P`` a chordless path through
  the hinge's neighbourhood.

The per-vertex families are merged with :func:`union_generate` so that each
PMC is emitted exactly once without losing the delay bound.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .chordless import chordless_paths
from .errors import NotTriconnected
from .graph import Component, Graph, components, is_clique, neighborhood
from .latching import LatchingGraph, build_latching, is_plane_induced
from .meter import WorkMeter
from .minsep import MinSep, minimal_separators_avoiding
from .planar import PlaneGraph, embed, is_triconnected
from .polydelay import UnionStats, union_generate
from .steering import SteeringCertificate, find_certificate, is_slot

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Port:
    vertex: int
    slot: frozenset[int]


@dataclass(frozen=True)
class ValidPair:
    u1: Port
    u2: Port
    hinges: tuple[int, ...] = ()


@dataclass(frozen=True)
class PMC:
    vertices: frozenset[int]
    certificate: SteeringCertificate | None
    category: str
    """The generator that produced the set: ``"K4"``, ``"wheel"``, ``"path"``,
    ``"hinge"`` or ``"complete"``. The certificate may show another
    bipartition of the same set."""
    component: Component | None = None
    """The component ``C`` of ``G - X`` the PMC was generated for."""

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


@dataclass
class PmcStats:
    emitted: int = 0
    by_category: Counter = field(default_factory=Counter)
    filter_rejections: int = 0
    minseps_seen: int = 0
    components_processed: int = 0
    empty_components: int = 0
    top: UnionStats = field(default_factory=UnionStats)
    inner_suppressed: int = 0
    inner_invariant_violations: int = 0
    per_vertex_duplicates: int = 0


# ---------------------------------------------------------------------------
# Ports, valid pairs, auxiliary graphs
# ---------------------------------------------------------------------------


def _vertices(c: Component | frozenset[int]) -> frozenset[int]:
    return c.vertices if isinstance(c, Component) else frozenset(c)


def ports(g: Graph, l: LatchingGraph, S: MinSep, C: Component | frozenset[int]) -> list[Port]:
    """Vertices of the opposite side whose latching attachment to ``S`` is a slot."""
    cp = S.other_side(C).vertices
    out = []
    for u in sorted(cp):
        r = l.neighbors(u) & S.vertices
        if r and is_slot(S.cycle_order, r):
            out.append(Port(u, r))
    return out


def hinges(S: MinSep, slot1: frozenset[int], slot2: frozenset[int]) -> tuple[int, ...]:
    cyc = S.cycle_order
    k = len(cyc)
    out = []
    for i, s in enumerate(cyc):
        a, b = cyc[i - 1], cyc[(i + 1) % k]
        for s1, s2 in ((a, b), (b, a)):
            if slot1 in ({s1}, {s1, s}) and slot2 in ({s2}, {s2, s}):
                out.append(s)
                break
    return tuple(out)


def valid_pairs(port_list: list[Port], S: MinSep) -> list[ValidPair]:
    """Port pairs whose combined slots are not a slot, with their hinges."""
    out = []
    for p1, p2 in combinations(port_list, 2):
        if is_slot(S.cycle_order, p1.slot | p2.slot):
            continue
        out.append(ValidPair(p1, p2, hinges(S, p1.slot, p2.slot)))
    return out


def _core(l: LatchingGraph, S: MinSep, C: Component | frozenset[int]) -> frozenset[int]:
    cp = S.other_side(C).vertices
    return cp - neighborhood(l.graph, S.vertices)


def vertices_A(l: LatchingGraph, S: MinSep, C, u1: int, u2: int) -> frozenset[int]:
    if u1 == u2:
        raise ValueError("ports of a pair must be distinct")
    return _core(l, S, C) | {u1, u2}


def vertices_B(l: LatchingGraph, S: MinSep, C, u1: int, u2: int, s: int,
               strict: bool = False) -> frozenset[int]:
    """Vertex set of ``B``: ``A`` plus the hinge's neighbours inside ``C'``.

    With ``strict``, only neighbours whose sole contact with ``S`` is the
    hinge are added; any other one would put a chord on the new cycle.
    """
    # N_L(s) is cut down to C': vertices of S or C cannot lie on the path
    cp = S.other_side(C).vertices
    extra = l.neighbors(s) & cp
    if strict:
        extra = frozenset(w for w in extra if l.neighbors(w) & S.vertices == {s})
    return vertices_A(l, S, C, u1, u2) | extra


def graph_A(l: LatchingGraph, S: MinSep, C, u1: int, u2: int) -> Graph:
    return l.induced(vertices_A(l, S, C, u1, u2))


def graph_B(l: LatchingGraph, S: MinSep, C, u1: int, u2: int, s: int,
            strict: bool = False) -> Graph:
    if not _is_hinge_of(S, l, u1, u2, s):
        raise ValueError(f"{s} is not a hinge of ports ({u1}, {u2})")
    return l.induced(vertices_B(l, S, C, u1, u2, s, strict))


def _is_hinge_of(S: MinSep, l: LatchingGraph, u1: int, u2: int, s: int) -> bool:
    r1 = l.neighbors(u1) & S.vertices
    r2 = l.neighbors(u2) & S.vertices
    return s in hinges(S, r1, r2)


def _is_path_between(h: Graph, vs: frozenset[int], a: int, b: int) -> bool:
    """Whether ``h[vs]`` is an induced path from ``a`` to ``b``."""
    if a not in vs or b not in vs or a == b:
        return False
    prev, cur, seen = None, a, 1
    while cur != b:
        nb = h.neighbors(cur) & vs
        if len(nb) != (1 if cur == a else 2):
            return False
        nxt = [w for w in nb if w != prev]
        if len(nxt) != 1:
            return False
        prev, cur = cur, nxt[0]
        seen += 1
        if seen > len(vs):
            return False
    return seen == len(vs) and len(h.neighbors(b) & vs) == 1


def is_arch(l: LatchingGraph, S: MinSep, P: frozenset[int]) -> bool:
    """``L[P]`` is a path and its neighbours on the cycle ``S`` form a nonempty non-slot set."""
    P = frozenset(P)
    if not P or P & S.vertices:
        return False
    h = l.induced(P)
    if len(P) > 1:
        ends = [v for v in P if h.degree(v) == 1]
        if len(ends) != 2 or not _is_path_between(l.graph, P, ends[0], ends[1]):
            return False
    attach = neighborhood(l.graph, P) & S.vertices
    return bool(attach) and not is_slot(S.cycle_order, attach)


def _certify(l: LatchingGraph, x: frozenset[int]) -> SteeringCertificate | None:
    if not is_plane_induced(l, x):
        return None
    return find_certificate(l.induced(x))


# ---------------------------------------------------------------------------
# Generation for one minimally separated component
# ---------------------------------------------------------------------------


def pmcs_for_component(
    g: Graph,
    l: LatchingGraph,
    S: MinSep,
    C: Component | frozenset[int],
    stats: PmcStats | None = None,
    meter: WorkMeter | None = None,
    check_invariants: bool = False,
    strict_hinge: bool = True,
) -> Iterator[PMC]:
    """PMCs ``X`` with ``C`` a component of ``G - X`` (requires ``|S| >= 4``).

    ``strict_hinge=False`` builds the hinge graphs from the full hinge
    neighbourhood; the output is the same but some candidates are then
    discarded by the steering check.
    """
    if len(S.vertices) < 4:
        raise ValueError("pmcs_for_component needs a separator of size at least 4")
    if stats is None:
        stats = PmcStats()
    sv = S.vertices
    comp = S.other_side(S.other_side(C))
    cp = S.other_side(C).vertices

    def accept(x: frozenset[int], category: str) -> PMC | None:
        if meter is not None:
            meter.tick(len(x) ** 2)
        cert = _certify(l, x)
        if cert is None:
            stats.filter_rejections += 1
            log.warning("candidate %s (%s) failed the steering check", sorted(x), category)
            return None
        return PMC(x, cert, category, comp)

    # |P| = 1: wheels centred in C'
    for u in sorted(cp):
        if meter is not None:
            meter.tick()
        r = l.neighbors(u) & sv
        if r and not is_slot(S.cycle_order, r):
            pmc = accept(sv | {u}, "wheel")
            if pmc is not None:
                yield pmc

    port_list = ports(g, l, S, C)
    pairs = valid_pairs(port_list, S)
    if meter is not None:
        meter.tick(len(port_list) ** 2 + sum(len(vp.hinges) for vp in pairs))
    families: list[tuple[int, int, frozenset[int], str]] = []
    for vp in pairs:
        u1, u2 = vp.u1.vertex, vp.u2.vertex
        families.append((u1, u2, vertices_A(l, S, C, u1, u2), "path"))
    for vp in pairs:
        u1, u2 = vp.u1.vertex, vp.u2.vertex
        for s in vp.hinges:
            families.append((u1, u2, vertices_B(l, S, C, u1, u2, s, strict_hinge), "hinge"))

    def gen(u1: int, u2: int, allowed: frozenset[int]) -> Iterator[frozenset[int]]:
        for p in chordless_paths(l.graph, u1, u2, meter, allowed=allowed):
            yield frozenset(p)

    def member(P: frozenset[int], i: int) -> bool:
        u1, u2, allowed, _ = families[i]
        return P <= allowed and _is_path_between(l.graph, P, u1, u2)

    ustats = UnionStats()
    union = union_generate([gen(u1, u2, a) for u1, u2, a, _ in families], member,
                           ustats, meter, check_invariants)
    for P in union:
        category = families[ustats.emitted_by[-1]][3]
        pmc = accept(sv | P, category)
        if pmc is not None:
            yield pmc
    stats.inner_suppressed += ustats.suppressed
    stats.inner_invariant_violations += ustats.invariant_violations


# ---------------------------------------------------------------------------
# Whole graph
# ---------------------------------------------------------------------------


def k4_pmcs(l: LatchingGraph, meter: WorkMeter | None = None) -> Iterator[PMC]:
    """Four-sets inducing a plane ``K4`` in the latching graph."""
    lg = l.graph
    for a in lg.vertices:
        for b in sorted(w for w in lg.neighbors(a) if w > a):
            common_ab = lg.neighbors(a) & lg.neighbors(b)
            for c in sorted(w for w in common_ab if w > b):
                for d in sorted(w for w in common_ab & lg.neighbors(c) if w > c):
                    if meter is not None:
                        meter.tick()
                    x = frozenset((a, b, c, d))
                    if is_plane_induced(l, x):
                        yield PMC(x, SteeringCertificate((b, c, d), (a,)), "K4")


def pmcs(
    g: Graph,
    pg: PlaneGraph | None = None,
    l: LatchingGraph | None = None,
    stats: PmcStats | None = None,
    meter: WorkMeter | None = None,
    check_invariants: bool = False,
    strict_hinge: bool = True,
) -> Iterator[PMC]:
    """Generate every PMC of a triconnected planar graph exactly once.

    ``pg`` and ``l`` may be supplied to reuse an embedding; otherwise the
    graph is embedded first. Raises :class:`NotTriconnected` or
    :class:`~planar_pmc.errors.NotPlanar`.
    """
    if stats is None:
        stats = PmcStats()

    def emit(p: PMC) -> PMC:
        stats.emitted += 1
        stats.by_category[p.category] += 1
        if meter is not None:
            meter.mark()
        return p

    if g.n <= 3 and is_clique(g, g.vertices):
        if g.n:
            yield emit(PMC(g.vertex_set(), None, "complete"))
        return
    if not is_triconnected(g):
        raise NotTriconnected("PMC generation needs a triconnected graph")
    if l is None:
        l = build_latching(pg if pg is not None else embed(g))

    for p in k4_pmcs(l, meter):
        yield emit(p)

    order = list(g.vertices)
    cache: dict[str, object] = {"x": None, "size": None}

    def sep_size(x: frozenset[int]) -> dict[int, int]:
        if cache["x"] != x:
            if meter is not None:
                meter.tick(g.n)
            size = {}
            for c in components(g, x):
                for v in c.vertices:
                    size[v] = len(c.neighborhood)
            cache["x"], cache["size"] = x, size
        return cache["size"]  # type: ignore[return-value]

    def member(p: PMC, i: int) -> bool:
        return sep_size(p.vertices).get(order[i], 0) >= 4

    def gen_v(v: int) -> Iterator[PMC]:
        seen: set[frozenset[int]] = set()
        for ms in minimal_separators_avoiding(g, l, v, meter):
            stats.minseps_seen += 1
            if len(ms.vertices) < 4:
                continue
            stats.components_processed += 1
            count = 0
            for p in pmcs_for_component(g, l, ms, ms.side_containing(v), stats, meter,
                                        check_invariants, strict_hinge):
                count += 1
                if p.vertices in seen:
                    stats.per_vertex_duplicates += 1
                seen.add(p.vertices)
                yield p
            if count == 0:
                stats.empty_components += 1
                log.warning("no PMC generated for separator %s", sorted(ms.vertices))

    gens = [gen_v(v) for v in order]
    for p in union_generate(gens, member, stats.top, meter, check_invariants):
        yield emit(p)
    if meter is not None:
        meter.finish()


def pmc_sets(g: Graph, **kwargs) -> set[frozenset[int]]:
    return {p.vertices for p in pmcs(g, **kwargs)}
