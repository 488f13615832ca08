"""Named planar graphs and random triconnected planar graphs."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import numpy as np
from scipy.spatial import ConvexHull

from .graph import Graph
from .planar import is_triconnected


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def wheel(k: int) -> Graph:
    """Rim ``0..k-1`` plus hub ``k``."""
    return Graph.from_edges(k + 1, [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)])


def prism(k: int) -> Graph:
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    return Graph.from_edges(2 * k, edges)


def antiprism(k: int) -> Graph:
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i), (j, k + i)]
    return Graph.from_edges(2 * k, edges)


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def theta(lengths: tuple[int, ...]) -> Graph:
    """Internally disjoint paths between vertices 0 and 1.

    ``lengths`` gives the number of internal vertices of each path.
    """
    edges = []
    nxt = 2
    for k in lengths:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def tetrahedron() -> Graph:
    return complete(4)


def cube() -> Graph:
    return Graph.from_networkx(nx.cubical_graph())


def octahedron() -> Graph:
    return Graph.from_networkx(nx.octahedral_graph())


def dodecahedron() -> Graph:
    return Graph.from_networkx(nx.dodecahedral_graph())


def icosahedron() -> Graph:
    return Graph.from_networkx(nx.icosahedral_graph())


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, ((i, rng.randrange(i)) for i in range(1, n)))


# ---------------------------------------------------------------------------
# Random triconnected planar graphs
# ---------------------------------------------------------------------------


def stacked_triangulation(n: int, rng: random.Random, flips: int = 0) -> Graph:
    """Grow a triangulation by inserting vertices into random faces.

    Without flips the result is a stacked (chordal) triangulation; random
    edge flips then mix in separating cycles of length four and more. Every
    triangulation on at least four vertices is triconnected.
    """
    if n < 4:
        raise ValueError("need at least 4 vertices")
    faces = {frozenset(f) for f in combinations(range(4), 3)}
    adj: dict[int, set[int]] = {v: set(range(4)) - {v} for v in range(4)}
    for v in range(4, n):
        f = rng.choice(sorted(faces, key=sorted))
        faces.remove(f)
        a, b, c = sorted(f)
        faces |= {frozenset((a, b, v)), frozenset((b, c, v)), frozenset((a, c, v))}
        adj[v] = {a, b, c}
        for w in (a, b, c):
            adj[w].add(v)
    for _ in range(flips):
        u = rng.randrange(n)
        v = rng.choice(sorted(adj[u]))
        if len(adj[u]) <= 3 or len(adj[v]) <= 3:
            continue
        fs = [f for f in faces if u in f and v in f]
        (w,) = fs[0] - {u, v}
        (x,) = fs[1] - {u, v}
        if x in adj[w]:
            continue
        adj[u].discard(v)
        adj[v].discard(u)
        adj[w].add(x)
        adj[x].add(w)
        faces -= set(fs)
        faces |= {frozenset((w, x, u)), frozenset((w, x, v))}
    return Graph(adj)


def hull_triangulation(n: int, rng: random.Random) -> Graph:
    """Triangulation given by the convex hull of random points on a sphere."""
    gen = np.random.default_rng(rng.randrange(2**32))
    pts = gen.normal(size=(n, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    hull = ConvexHull(pts)
    edges = set()
    for tri in hull.simplices:
        for a, b in combinations(sorted(int(t) for t in tri), 2):
            edges.add((a, b))
    return Graph.from_edges(n, edges)


def thin_triconnected(g: Graph, rng: random.Random, deletions: int) -> Graph:
    """Delete up to ``deletions`` random edges while staying triconnected."""
    edges = list(g.edges())
    rng.shuffle(edges)
    done = 0
    for u, v in edges:
        if done >= deletions:
            break
        if g.degree(u) <= 3 or g.degree(v) <= 3:
            continue
        h = g.without_edge(u, v)
        if is_triconnected(h):
            g = h
            done += 1
    return g


def random_triconnected_planar(n: int, rng: random.Random, *, flips: int | None = None,
                               deletions: int | None = None, kind: str = "stacked") -> Graph:
    """Random triconnected planar graph with some faces longer than triangles."""
    if kind == "stacked":
        g = stacked_triangulation(n, rng, flips=2 * n if flips is None else flips)
    elif kind == "hull":
        g = hull_triangulation(n, rng)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if deletions is None:
        deletions = rng.randrange(0, max(1, n // 2) + 1)
    return thin_triconnected(g, rng, deletions)
