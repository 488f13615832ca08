"""Latching graphs: a plane graph plus every chord of every face of size >= 4."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import MultiEdge, NotBiconnected
from .graph import Graph
from .planar import Face, PlaneGraph, faces, is_biconnected


@dataclass(frozen=True)
class LatchingEdge:
    u: int
    v: int
    face: int | None = None
    """Face id the chord was drawn in; ``None`` for an edge of the base graph."""

    @property
    def is_chord(self) -> bool:
        return self.face is not None


class LatchingGraph:
    """Latching graph of a biconnected plane graph.

    ``graph`` is the latching graph as a plain :class:`Graph`;
    ``origin`` maps each unordered pair to the face its chord lies in, or to
    ``None`` for base-graph edges.
    """

    def __init__(self, base: PlaneGraph, graph: Graph, origin: dict[frozenset[int], int | None],
                 face_list: list[Face]) -> None:
        self.base = base
        self.graph = graph
        self.origin = origin
        self.faces = face_list
        self._faces_of: dict[int, list[int]] = {v: [] for v in graph.vertices}
        for f in face_list:
            for v in f.vertex_set:
                self._faces_of[v].append(f.id)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.graph.vertices

    def neighbors(self, v: int) -> frozenset[int]:
        return self.graph.neighbors(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v)

    def edges(self) -> list[LatchingEdge]:
        return [LatchingEdge(u, v, self.origin[frozenset((u, v))]) for u, v in self.graph.edges()]

    def chords(self) -> list[LatchingEdge]:
        return [e for e in self.edges() if e.is_chord]

    def faces_of(self, v: int) -> list[int]:
        return self._faces_of[v]

    def induced(self, x: Iterable[int]) -> Graph:
        return self.graph.subgraph(x)

    def induced_origins(self, x: Iterable[int]) -> dict[tuple[int, int], int | None]:
        h = self.induced(x)
        return {(u, v): self.origin[frozenset((u, v))] for u, v in h.edges()}

    def is_plane_induced(self, x: Iterable[int]) -> bool:
        return is_plane_induced(self, x)

    def __repr__(self) -> str:
        return f"LatchingGraph(n={self.graph.n}, edges={self.graph.m}, chords={len(self.chords())})"


def build_latching(pg: PlaneGraph) -> LatchingGraph:
    """Add all chords of faces of length four or more.

    Raises :class:`MultiEdge` as soon as a vertex pair would receive a
    second edge, which cannot happen on triconnected input.
    """
    g = pg.graph
    if not is_biconnected(g):
        raise NotBiconnected("latching graphs need a biconnected plane graph")
    face_list = faces(pg)
    origin: dict[frozenset[int], int | None] = {frozenset(e): None for e in g.edges()}
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    for f in face_list:
        if not f.is_simple:
            raise NotBiconnected(f"face {f.id} is not bounded by a simple cycle")
        k = len(f.boundary)
        if k < 4:
            continue
        for i, j in combinations(range(k), 2):
            if j - i == 1 or (i == 0 and j == k - 1):
                continue
            u, v = f.boundary[i], f.boundary[j]
            key = frozenset((u, v))
            if key in origin:
                prev = origin[key]
                where = "a graph edge" if prev is None else f"a chord of face {prev}"
                raise MultiEdge(u, v, f"chord {{{u}, {v}}} of face {f.id} duplicates {where}")
            origin[key] = f.id
            adj[u].add(v)
            adj[v].add(u)
    return LatchingGraph(pg, Graph(adj), origin, face_list)


def induced(l: LatchingGraph, x: Iterable[int]) -> Graph:
    return l.induced(x)


def is_plane_induced(l: LatchingGraph, x: Iterable[int]) -> bool:
    """No face of the base graph carries four or more vertices of ``x``."""
    counts: dict[int, int] = {}
    for v in x:
        for f in l.faces_of(v):
            c = counts.get(f, 0) + 1
            if c >= 4:
                return False
            counts[f] = c
    return True
