"""Minimal separators of a triconnected plane graph as chordless cycles of
its latching graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .chordless import chordless_cycles
from .graph import Component, Graph, components
from .latching import LatchingGraph
from .meter import WorkMeter


@dataclass(frozen=True)
class MinSep:
    vertices: frozenset[int]
    cycle_order: tuple[int, ...]
    sides: tuple[Component, Component]

    def __len__(self) -> int:
        return len(self.vertices)

    def side_containing(self, v: int) -> Component:
        for c in self.sides:
            if v in c.vertices:
                return c
        raise ValueError(f"vertex {v} lies in no full component of {sorted(self.vertices)}")

    def other_side(self, c: Component | frozenset[int]) -> Component:
        vs = c.vertices if isinstance(c, Component) else frozenset(c)
        a, b = self.sides
        if a.vertices == vs:
            return b
        if b.vertices == vs:
            return a
        raise ValueError("not a full component of this separator")


def _as_minsep(g: Graph, cycle: tuple[int, ...], meter: WorkMeter | None) -> MinSep | None:
    s = frozenset(cycle)
    if meter is not None:
        meter.tick(g.n)
    full = [c for c in components(g, s) if c.neighborhood == s]
    if len(full) < 2:
        return None
    if len(full) > 2:
        # a triconnected plane graph never has more than two
        raise RuntimeError(f"separator {sorted(s)} has {len(full)} full components")
    return MinSep(s, cycle, (full[0], full[1]))


def minimal_separators(g: Graph, l: LatchingGraph,
                       meter: WorkMeter | None = None) -> Iterator[MinSep]:
    """Chordless cycles of ``l`` that separate ``g`` with two full sides.

    Only triangles bounding an empty region are filtered out; any chordless
    cycle on four or more vertices is always a minimal separator.
    """
    for cyc in chordless_cycles(l.graph, meter):
        ms = _as_minsep(g, cyc, meter)
        if ms is not None:
            yield ms


def minimal_separators_avoiding(g: Graph, l: LatchingGraph, v: int,
                                meter: WorkMeter | None = None) -> Iterator[MinSep]:
    """Minimal separators not containing ``v``: chordless cycles of ``l - v``."""
    allowed = l.graph.vertex_set() - {v}
    for cyc in chordless_cycles(l.graph, meter, allowed=allowed):
        ms = _as_minsep(g, cyc, meter)
        if ms is not None:
            yield ms
