"""Brute-force reference implementations.

Nothing here reuses the enumeration pipeline: every oracle works from the
adjacency of a :class:`Graph` alone, on bitmasks, by exhaustive search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

import networkx as nx

from . import generators as gen
from .errors import TooLarge
from .graph import Graph


def _check_size(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise TooLarge(f"{what} is limited to n <= {limit} (got {g.n})")


class _Masks:
    """Bitmask view of a graph on ``0..n-1``."""

    def __init__(self, g: Graph) -> None:
        h, self.labels = g.relabeled()
        self.n = h.n
        self.adj = [0] * h.n
        for u, v in h.edges():
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.full = (1 << h.n) - 1

    def bits(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def nbhd(self, mask: int) -> int:
        out = 0
        for v in self.bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def comps(self, removed: int) -> list[tuple[int, int]]:
        """(component, neighbourhood) masks of ``G - removed``."""
        rest = self.full & ~removed
        out = []
        while rest:
            comp = rest & -rest
            frontier = comp
            while frontier:
                grow = 0
                for v in self.bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & rest & ~comp
                comp |= frontier
            rest &= ~comp
            out.append((comp, self.nbhd(comp) & removed))
        return out

    def to_set(self, mask: int) -> frozenset[int]:
        return frozenset(self.labels[i] for i in self.bits(mask))


def pmcs_bruteforce(g: Graph) -> set[frozenset[int]]:
    """Every vertex set satisfying both PMC conditions, by full subset scan."""
    _check_size(g, 16, "pmcs_bruteforce")
    m = _Masks(g)
    out = set()
    for x in range(1, m.full + 1):
        comps = m.comps(x)
        if any(nb == x for _, nb in comps):
            continue
        ok = True
        xs = m.bits(x)
        for i, a in enumerate(xs):
            need = x & ~m.adj[a] & ~(1 << a)
            for _, nb in comps:
                if nb >> a & 1:
                    need &= ~nb
            if need:
                ok = False
                break
        if ok:
            out.add(m.to_set(x))
    return out


def minseps_bruteforce(g: Graph) -> set[frozenset[int]]:
    """Every vertex set with at least two full components."""
    _check_size(g, 16, "minseps_bruteforce")
    m = _Masks(g)
    out = set()
    for s in range(1, m.full + 1):
        if sum(1 for _, nb in m.comps(s) if nb == s) >= 2:
            out.add(m.to_set(s))
    return out


def minimal_ab_separators_bruteforce(g: Graph) -> set[frozenset[int]]:
    """Union over all vertex pairs of inclusion-minimal ``a``-``b`` separators."""
    _check_size(g, 12, "minimal_ab_separators_bruteforce")
    m = _Masks(g)

    def separates(s: int, a: int, b: int) -> bool:
        for comp, _ in m.comps(s):
            if comp >> a & 1:
                return not comp >> b & 1
        return True

    out = set()
    for a, b in combinations(range(m.n), 2):
        if m.adj[a] >> b & 1:
            continue
        seps = [s for s in range(1, m.full + 1)
                if not (s >> a & 1 or s >> b & 1) and separates(s, a, b)]
        for s in seps:
            if all(not separates(s & ~(1 << v), a, b) for v in m.bits(s)):
                out.add(m.to_set(s))
    return out


def treewidth_bruteforce(g: Graph) -> int:
    """Exact treewidth by dynamic programming over elimination prefixes.

    ``TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`` where ``Q(S, v)`` are the
    vertices outside ``S + v`` reachable from ``v`` through ``S``.
    """
    _check_size(g, 20, "treewidth_bruteforce")
    if g.n == 0:
        return -1
    m = _Masks(g)
    adj = m.adj

    def q(s: int, v: int) -> int:
        inside = 1 << v
        frontier = inside
        reach = 0
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= adj[low.bit_length() - 1]
                f ^= low
            reach |= grow
            frontier = grow & s & ~inside
            inside |= frontier
        return bin(reach & ~s & ~(1 << v)).count("1")

    tw = [0] * (1 << m.n)
    tw[0] = -1
    for s in range(1, 1 << m.n):
        best = m.n
        f = s
        while f:
            low = f & -f
            v = low.bit_length() - 1
            f ^= low
            rest = s ^ low
            prev = tw[rest]
            if prev >= best:
                continue
            cand = max(prev, q(rest, v))
            if cand < best:
                best = cand
        tw[s] = best
    return tw[m.full]


def _is_chordless_cycle(m: _Masks, cyc: tuple[int, ...]) -> bool:
    mask = sum(1 << v for v in cyc)
    return all(bin(m.adj[v] & mask).count("1") == 2 for v in cyc)


def chordless_cycles_bruteforce(g: Graph) -> set[tuple[int, ...]]:
    """All simple cycles by DFS, filtered to chordless, in canonical rotation.

    Canonical rotation: minimum vertex first, then its smaller neighbour.
    """
    _check_size(g, 14, "chordless_cycles_bruteforce")
    m = _Masks(g)
    out = set()

    def dfs(start: int, path: list[int], used: int) -> None:
        v = path[-1]
        for w in m.bits(m.adj[v]):
            if w == start and len(path) >= 3:
                if path[1] < path[-1] and _is_chordless_cycle(m, tuple(path)):
                    out.add(tuple(m.labels[u] for u in path))
            elif w > start and not used >> w & 1:
                path.append(w)
                dfs(start, path, used | 1 << w)
                path.pop()

    for s in range(m.n):
        dfs(s, [s], 1 << s)
    return out


def chordless_paths_bruteforce(g: Graph, s: int, t: int) -> set[tuple[int, ...]]:
    _check_size(g, 14, "chordless_paths_bruteforce")
    m = _Masks(g)
    index = {v: i for i, v in enumerate(m.labels)}
    si, ti = index[s], index[t]
    out = set()

    def dfs(path: list[int], used: int) -> None:
        v = path[-1]
        if v == ti:
            mask = used
            k = len(path)
            deg = [bin(m.adj[u] & mask).count("1") for u in path]
            if sum(deg) == 2 * (k - 1):
                out.add(tuple(m.labels[u] for u in path))
            return
        for w in m.bits(m.adj[v] & ~used):
            path.append(w)
            dfs(path, used | 1 << w)
            path.pop()

    dfs([si], 1 << si)
    return out


def steering_partitions_bruteforce(g: Graph) -> set[frozenset[int]]:
    """Every ``P`` for which ``(V - P, P)`` is a steering bipartition of ``g``.

    Scans all vertex subsets and checks the definition directly.
    """
    _check_size(g, 14, "steering_partitions_bruteforce")
    m = _Masks(g)
    out = set()

    def deg(v: int, mask: int) -> int:
        return bin(m.adj[v] & mask).count("1")

    def is_slot(r: int) -> bool:
        # on an induced cycle, two vertices are consecutive iff adjacent
        vs = m.bits(r)
        return len(vs) == 1 or (len(vs) == 2 and m.adj[vs[0]] >> vs[1] & 1 == 1)

    for p in range(1, m.full):
        s = m.full & ~p
        sv = m.bits(s)
        if len(sv) < 3 or any(deg(v, s) != 2 for v in sv) or len(m.comps(p)) != 1:
            continue
        pv = m.bits(p)
        if len(pv) >= 2:
            d = [deg(v, p) for v in pv]
            if sorted(d)[:2] != [1, 1] or max(d) > 2 or len(m.comps(s)) != 1:
                continue
            ends = [v for v, k in zip(pv, d) if k == 1]
            inner = [v for v, k in zip(pv, d) if k == 2]
            if any(m.adj[v] & s for v in inner):
                continue
            if not all(m.adj[t] & s and is_slot(m.adj[t] & s) for t in ends):
                continue
        elif len(m.comps(s)) != 1:
            continue
        attach = m.nbhd(p) & s
        if attach and not is_slot(attach):
            out.add(m.to_set(p))
    return out


def _maximal_cliques(adj: list[int]) -> list[int]:
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_src = p | x
        u = (pivot_src & -pivot_src).bit_length() - 1
        cand = p & ~adj[u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            bk(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            cand ^= low

    bk(0, (1 << len(adj)) - 1, 0)
    return out


def minimal_triangulations(g: Graph) -> list[list[int]]:
    """Adjacency masks of every minimal triangulation.

    Every minimal triangulation is the fill graph of some elimination
    ordering, so all ``n!`` orderings are tried and the inclusion-minimal
    fill edge sets kept.
    """
    _check_size(g, 8, "minimal_triangulations")
    m = _Masks(g)
    fills: set[frozenset[tuple[int, int]]] = set()
    for order in permutations(range(m.n)):
        adj = list(m.adj)
        done = 0
        fill = set()
        for v in order:
            nb = m.bits(adj[v] & ~done)
            for a, b in combinations(nb, 2):
                if not adj[a] >> b & 1:
                    adj[a] |= 1 << b
                    adj[b] |= 1 << a
                    fill.add((a, b))
            done |= 1 << v
        fills.add(frozenset(fill))
    minimal = [f for f in fills if not any(o < f for o in fills)]
    out = []
    for f in minimal:
        adj = list(m.adj)
        for a, b in f:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        out.append(adj)
    return out


def pmcs_by_triangulations(g: Graph) -> set[frozenset[int]]:
    """Maximal cliques of all minimal triangulations (definition of a PMC)."""
    m = _Masks(g)
    out = set()
    for adj in minimal_triangulations(g):
        for c in _maximal_cliques(adj):
            out.add(m.to_set(c))
    return out


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: Graph
    planar: bool
    biconnected: bool
    triconnected: bool

    @property
    def n(self) -> int:
        return self.graph.n


def _connected_after(g: Graph, removed: set[int]) -> bool:
    rest = [v for v in g.vertices if v not in removed]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def triconnected_by_pair_removal(g: Graph) -> bool:
    """No vertex set of size at most two disconnects ``g``."""
    if not _connected_after(g, set()):
        return False
    vs = g.vertices
    if any(not _connected_after(g, {v}) for v in vs):
        return False
    return all(_connected_after(g, {a, b}) for a, b in combinations(vs, 2))


def biconnected_by_removal(g: Graph) -> bool:
    return _connected_after(g, set()) and all(_connected_after(g, {v}) for v in g.vertices)


def _label(name: str, g: Graph) -> CorpusGraph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    return CorpusGraph(name, g, nx.check_planarity(nxg)[0], biconnected_by_removal(g),
                       triconnected_by_pair_removal(g))


def glue(a: Graph, b: Graph, pairs: list[tuple[int, int]]) -> Graph:
    """Disjoint union of ``a`` and ``b`` with ``b``'s vertex ``j`` identified
    with ``a``'s vertex ``i`` for each ``(i, j)`` in ``pairs``."""
    ident = {j: i for i, j in pairs}
    index = {}
    nxt = a.n
    for v in b.vertices:
        if v in ident:
            index[v] = ident[v]
        else:
            index[v] = nxt
            nxt += 1
    edges = list(a.edges()) + [(index[u], index[v]) for u, v in b.edges()]
    return Graph.from_edges(nxt, edges)


def corpus(seed: int = 1, n_max: int = 12, n_random: int = 50) -> list[CorpusGraph]:
    """Deterministic test corpus of planar graphs up to ``n_max`` vertices.

    Triconnected: platonic solids, wheels, prisms, antiprisms, and random
    graphs (stacked triangulations with flips, convex-hull triangulations,
    both thinned by triconnectivity-preserving edge deletions). Not
    triconnected: trees, cycles, grids, theta graphs, and gluings of
    triconnected pieces along edges, vertex pairs and cut vertices.
    """
    rng = random.Random(seed)
    items: list[tuple[str, Graph]] = [
        ("K4", gen.tetrahedron()),
        ("octahedron", gen.octahedron()),
        ("cube", gen.cube()),
        ("icosahedron", gen.icosahedron()),
        ("dodecahedron", gen.dodecahedron()),
    ]
    items += [(f"wheel{k}", gen.wheel(k)) for k in range(3, n_max)]
    items += [(f"prism{k}", gen.prism(k)) for k in range(3, n_max // 2 + 1)]
    items += [(f"antiprism{k}", gen.antiprism(k)) for k in range(3, n_max // 2 + 1)]
    for i in range(n_random):
        n = rng.randint(5, max(5, n_max))
        kind = "stacked" if i % 3 else "hull"
        items.append((f"random-{kind}-{i}", gen.random_triconnected_planar(n, rng, kind=kind)))

    # pipeline graphs that are planar but not triconnected
    items += [(f"tree{n}", gen.random_tree(n, rng)) for n in (1, 2, 5, 9, 12)]
    items += [(f"cycle{n}", gen.cycle(n)) for n in (3, 4, 7)]
    items += [(f"grid{r}x{c}", gen.grid(r, c)) for r, c in ((2, 3), (3, 3), (3, 4), (4, 4))]
    items += [("theta-1-2-3", gen.theta((1, 2, 3))), ("theta-2-2-2-2", gen.theta((2, 2, 2, 2))),
              ("theta-3-3-4", gen.theta((3, 3, 4)))]
    items.append(("two-triangles", Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])))
    for i in range(8):
        a = gen.random_triconnected_planar(rng.randint(4, 7), rng, kind="stacked")
        b = gen.random_triconnected_planar(rng.randint(4, 7), rng, kind="stacked")
        mode = i % 3
        if mode == 0:
            u, v = next(iter(a.edges()))
            x, y = next(iter(b.edges()))
            g = glue(a, b, [(u, x), (v, y)])
        elif mode == 1:
            u = 0
            far = [w for w in a.vertices if w != u and not a.has_edge(u, w)]
            v = far[0] if far else 1
            x, y = next(iter(b.edges()))
            g = glue(a, b.without_edge(x, y), [(u, x), (v, y)])
        else:
            g = glue(a, b, [(0, 0)])
        items.append((f"glued-{mode}-{i}", g))
    items.append(("wheel-chain", glue(glue(gen.wheel(4), gen.wheel(5), [(0, 0), (1, 1)]),
                                      gen.prism(3), [(6, 0)])))
    return [_label(name, g) for name, g in items if g.n <= n_max]
