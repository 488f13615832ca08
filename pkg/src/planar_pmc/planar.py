"""Combinatorial embeddings (rotation systems), faces, and low-order
connectivity tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx

from .errors import Disconnected, InvalidEmbedding, NotPlanar
from .graph import Graph, is_connected


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]
    vertex_set: frozenset[int]

    @property
    def is_simple(self) -> bool:
        return len(self.boundary) == len(self.vertex_set)

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class PlaneGraph:
    """A graph together with a clockwise rotation at every vertex.

    Constructing one validates the rotation system: each rotation must be
    a cyclic order of exactly the neighbourhood, and the face count must
    satisfy Euler's formula for the (connected) graph.
    """

    graph: Graph
    rotation: Mapping[int, tuple[int, ...]]
    _succ: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        rot = {v: tuple(self.rotation.get(v, ())) for v in g.vertices}
        extra = set(self.rotation) - set(g.vertices)
        if extra:
            raise InvalidEmbedding(f"rotation given for unknown vertices {sorted(extra)}")
        succ: dict[tuple[int, int], int] = {}
        for v, order in rot.items():
            if len(order) != len(set(order)) or frozenset(order) != g.neighbors(v):
                raise InvalidEmbedding(f"rotation at {v} is not a permutation of its neighbours")
            for i, u in enumerate(order):
                succ[(v, u)] = order[(i + 1) % len(order)]
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "_succ", succ)
        if not is_connected(g):
            raise Disconnected("plane graphs must be connected")
        n_faces = len(self._walks())
        if g.m == 0:
            n_faces = 1
        if g.n - g.m + n_faces != 2:
            raise InvalidEmbedding(
                f"Euler check failed: V - E + F = {g.n} - {g.m} + {n_faces} != 2"
            )

    def next_clockwise(self, v: int, u: int) -> int:
        """The neighbour of ``v`` right after ``u`` in clockwise order."""
        return self._succ[(v, u)]

    def _walks(self) -> list[tuple[int, ...]]:
        seen: set[tuple[int, int]] = set()
        walks = []
        for u in self.graph.vertices:
            for v in sorted(self.graph.neighbors(u)):
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self._succ[(b, a)]
                walks.append(tuple(walk))
        return walks

    def faces(self) -> list[Face]:
        return faces(self)


def faces(pg: PlaneGraph) -> list[Face]:
    """Face boundary walks; every directed edge is used exactly once.

    A walk enters ``v`` from ``u`` and leaves towards the clockwise successor
    of ``u`` around ``v``. Faces are listed in order of their first dart.
    """
    return [Face(i, w, frozenset(w)) for i, w in enumerate(pg._walks())]


def embed(g: Graph) -> PlaneGraph:
    """Find a planar rotation system for a connected graph."""
    if not is_connected(g):
        raise Disconnected("embed requires a connected graph")
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        raise NotPlanar("graph has no planar embedding")
    rotation = {v: tuple(emb.neighbors_cw_order(v)) for v in g.vertices}
    return PlaneGraph(g, rotation)


def plane_graph_from_rotation(g: Graph, rotation: Mapping[int, Sequence[int]]) -> PlaneGraph:
    return PlaneGraph(g, {v: tuple(r) for v, r in rotation.items()})


def is_planar(g: Graph) -> bool:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    return nx.check_planarity(nxg)[0]


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _dfs_lowpoints(g: Graph) -> tuple[set[int], list[frozenset[int]]]:
    """Articulation points and biconnected components (as vertex sets).

    Iterative Hopcroft-Tarjan over every connected component. Isolated
    vertices form singleton blocks.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    blocks: list[frozenset[int]] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not g.neighbors(root):
            blocks.append(frozenset([root]))
            continue
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append((v, w))
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cut.add(parent)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(block))
        if root_children >= 2:
            cut.add(root)
    return cut, blocks


def articulation_points(g: Graph) -> frozenset[int]:
    return frozenset(_dfs_lowpoints(g)[0])


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks, ordered by minimum vertex."""
    return sorted(_dfs_lowpoints(g)[1], key=lambda b: (min(b), len(b)))


def is_biconnected(g: Graph) -> bool:
    if g.n <= 2:
        return is_connected(g)
    return is_connected(g) and not articulation_points(g)


def is_triconnected(g: Graph) -> bool:
    """No separator with fewer than three vertices.

    Removing each vertex ``v`` in turn, ``g - v`` must stay connected and
    free of cut vertices; this covers every separator of size one or two.
    Complete graphs (including K1..K3) are triconnected by this definition.
    """
    if not is_connected(g):
        return False
    for v in g.vertices:
        h = g.remove([v])
        if not is_connected(h) or articulation_points(h):
            return False
    return True


def two_separators(g: Graph) -> list[frozenset[int]]:
    """All separators of size two of a biconnected graph, sorted."""
    out = set()
    for v in g.vertices:
        for a in articulation_points(g.remove([v])):
            out.add(frozenset((v, a)))
    return sorted(out, key=lambda s: tuple(sorted(s)))
