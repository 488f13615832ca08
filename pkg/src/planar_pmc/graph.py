"""Simple undirected graphs on integer vertices, plus the separator and
potential-maximal-clique predicates everything else is checked against.

Vertex sets are plain ``frozenset[int]``. A whole input graph uses the ids
``0..n-1``; induced subgraphs keep the ids of their parent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import Disconnected

VertexSet = frozenset


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    adjacency:
        Mapping from each vertex to an iterable of its neighbours. The
        mapping must be symmetric and free of self-loops.
    """

    __slots__ = ("_adj", "_vertices", "_m")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]) -> None:
        adj = {v: frozenset(nbrs) for v, nbrs in adjacency.items()}
        m2 = 0
        for v, nbrs in adj.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in adj or v not in adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            m2 += len(nbrs)
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        self._m = m2 // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ``0..n-1``; duplicate edges are merged."""
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def from_networkx(cls, nxg) -> "Graph":
        """Relabel a networkx graph to ``0..n-1`` in sorted node order."""
        nodes = sorted(nxg.nodes())
        index = {u: i for i, u in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in self._vertices:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    # -- derived graphs ----------------------------------------------------

    def subgraph(self, vs: Iterable[int]) -> "Graph":
        keep = frozenset(vs)
        return Graph({v: self._adj[v] & keep for v in keep})

    def remove(self, vs: Iterable[int]) -> "Graph":
        return self.subgraph(self.vertex_set() - frozenset(vs))

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        for u, v in extra:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return Graph(adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = {w: set(nbrs) for w, nbrs in self._adj.items()}
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph(adj)

    def relabeled(self) -> tuple["Graph", list[int]]:
        """Return a copy on ``0..k-1`` and the list mapping new ids to old."""
        order = list(self._vertices)
        index = {v: i for i, v in enumerate(order)}
        return (
            Graph({index[v]: [index[u] for u in self._adj[v]] for v in order}),
            order,
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, nb) for v, nb in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    neighborhood: frozenset[int]

    @property
    def key(self) -> int:
        return min(self.vertices)


def neighborhood(g: Graph, u: Iterable[int]) -> frozenset[int]:
    """Open neighbourhood of ``u``: vertices adjacent to ``u`` but not in it."""
    us = frozenset(u)
    out: set[int] = set()
    for v in us:
        out |= g.neighbors(v)
    return frozenset(out - us)


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_connected(g: Graph, vs: Iterable[int] | None = None) -> bool:
    """Whether ``vs`` (default: all vertices) induces a connected graph.

    The empty set counts as connected.
    """
    keep = g.vertex_set() if vs is None else frozenset(vs)
    if not keep:
        return True
    start = next(iter(keep))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in keep and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(keep)


def components(g: Graph, s: Iterable[int] = ()) -> list[Component]:
    """Components of ``g - s`` with their open neighbourhoods.

    Ordered by minimum vertex id.
    """
    removed = frozenset(s)
    seen: set[int] = set(removed)
    out: list[Component] = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        nbhd: set[int] = set()
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in removed:
                    nbhd.add(w)
                elif w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(Component(frozenset(comp), frozenset(nbhd)))
    return out


def full_components(g: Graph, s: Iterable[int]) -> list[Component]:
    s = frozenset(s)
    return [c for c in components(g, s) if c.neighborhood == s]


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``g - s`` has at least two full components."""
    s = frozenset(s)
    if not s:
        return False
    return len(full_components(g, s)) >= 2


def is_pmc(g: Graph, x: Iterable[int]) -> bool:
    """Potential maximal clique test via the two Bouchitte-Todinca conditions.

    ``x`` is a PMC iff no component of ``g - x`` is full, and every pair of
    ``x`` is either adjacent or jointly contained in the neighbourhood of some
    component.
    """
    x = frozenset(x)
    if not x:
        return False
    comps = components(g, x)
    if any(c.neighborhood == x for c in comps):
        return False
    covered: set[tuple[int, int]] = set()
    for c in comps:
        covered.update(combinations(sorted(c.neighborhood), 2))
    return all(g.has_edge(a, b) or (a, b) in covered for a, b in combinations(sorted(x), 2))
