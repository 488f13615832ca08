"""Exact treewidth: the Bouchitte-Todinca dynamic program over potential
maximal cliques, and a planar pipeline that splits at cut vertices and
2-separators before running it on triconnected pieces."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import IncompletePmcSet, NotPlanar
from .graph import Component, Graph, components, is_clique, is_connected, require_connected
from .latching import build_latching
from .planar import articulation_points, biconnected_components, embed, is_planar, two_separators
from .pmc import PmcStats, pmcs


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def bags_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.bags) if v in b]


def validate_td(g: Graph, td: TreeDecomposition) -> bool:
    """Check the three tree-decomposition axioms and that the edges form a tree."""
    k = len(td.bags)
    if k == 0:
        return g.n == 0
    if len(td.edges) != k - 1:
        return False
    verts = g.vertex_set()
    if any(not b <= verts for b in td.bags):
        return False
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in td.edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            return False
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != k:
        return False

    occ: dict[int, set[int]] = {v: set() for v in verts}
    for i, b in enumerate(td.bags):
        for v in b:
            occ[v].add(i)
    if any(not s for s in occ.values()):
        return False
    for u, v in g.edges():
        if not occ[u] & occ[v]:
            return False
    # in a tree, a node set is connected iff it spans |set| - 1 tree edges
    for s in occ.values():
        inside = sum(1 for i, j in td.edges if i in s and j in s)
        if inside != len(s) - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Bouchitte-Todinca dynamic program
# ---------------------------------------------------------------------------


def treewidth_from_pmcs(g: Graph, pmc_set: Iterable[Iterable[int]]) -> tuple[int, TreeDecomposition]:
    """Treewidth of a connected graph from the full set of its PMCs.

    Blocks ``(S, C)`` with ``S = N(C)`` are solved by increasing ``|C|``;
    the cost of a block is the best ``max(|Omega| - 1, child costs)`` over
    PMCs ``S < Omega <= S + C``. Raises :class:`IncompletePmcSet` when a
    block or the root has no usable PMC.
    """
    require_connected(g)
    omegas = sorted({frozenset(x) for x in pmc_set}, key=lambda x: (len(x), sorted(x)))
    verts = g.vertex_set()
    if not omegas:
        raise IncompletePmcSet("no potential maximal cliques given")
    for x in omegas:
        if not x or not x <= verts:
            raise ValueError(f"{sorted(x)} is not a vertex subset of the graph")

    comps_of: dict[frozenset[int], list[Component]] = {x: components(g, x) for x in omegas}
    side_cache: dict[frozenset[int], list[Component]] = {}

    def side(s: frozenset[int], v: int) -> Component:
        if s not in side_cache:
            side_cache[s] = components(g, s)
        for c in side_cache[s]:
            if v in c.vertices:
                return c
        raise AssertionError("unreachable")

    # candidate PMCs per block
    Block = tuple[frozenset[int], frozenset[int]]
    candidates: dict[Block, list[frozenset[int]]] = {}
    needed: set[Block] = set()
    for x in omegas:
        for d in comps_of[x]:
            needed.add((d.neighborhood, d.vertices))
            s = d.neighborhood
            rest = x - s
            if not rest:
                continue
            c = side(s, min(rest))
            if rest <= c.vertices and c.neighborhood == s:
                candidates.setdefault((s, c.vertices), []).append(x)

    cost: dict[Block, int] = {}
    choice: dict[Block, frozenset[int]] = {}

    def children(x: frozenset[int], inside: frozenset[int] | None) -> list[Block]:
        return [(d.neighborhood, d.vertices) for d in comps_of[x]
                if inside is None or d.vertices <= inside]

    for blk in sorted(needed, key=lambda b: (len(b[1]), sorted(b[1]), sorted(b[0]))):
        s, c = blk
        best, arg = None, None
        for x in candidates.get(blk, ()):
            val = len(x) - 1
            for ch in children(x, c):
                val = max(val, cost[ch])
            if best is None or val < best:
                best, arg = val, x
        if best is None:
            raise IncompletePmcSet(
                f"block (S={sorted(s)}, C={sorted(c)}) has no PMC candidate")
        cost[blk], choice[blk] = best, arg

    best, root = None, None
    for x in omegas:
        val = len(x) - 1
        for ch in children(x, None):
            val = max(val, cost[ch])
        if best is None or val < best:
            best, root = val, x
    assert best is not None and root is not None

    bags: list[frozenset[int]] = [root]
    edges: list[tuple[int, int]] = []
    stack = [(0, ch) for ch in children(root, None)]
    while stack:
        parent, blk = stack.pop()
        x = choice[blk]
        bags.append(x)
        i = len(bags) - 1
        edges.append((parent, i))
        stack.extend((i, ch) for ch in children(x, blk[1]))
    td = TreeDecomposition(tuple(bags), tuple(edges))
    assert td.width == best
    return best, td


# ---------------------------------------------------------------------------
# Planar pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitRecord:
    separator: frozenset[int]
    child_sizes: tuple[int, ...]
    child_widths: tuple[int, ...]
    width: int


@dataclass
class TreewidthStats:
    pieces: Counter = field(default_factory=Counter)
    """How many pieces were settled by each rule."""
    splits: list[SplitRecord] = field(default_factory=list)
    pmc_counts: list[int] = field(default_factory=list)
    """``|Pi|`` of each triconnected piece."""


def _single_bag(g: Graph) -> TreeDecomposition:
    return TreeDecomposition((g.vertex_set(),), ())


def _tree_td(g: Graph) -> TreeDecomposition:
    root = g.vertices[0]
    if g.n == 1:
        return _single_bag(g)
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    index = {v: i for i, v in enumerate(order[1:])}
    bags = tuple(frozenset((v, parent[v])) for v in order[1:])
    edges = []
    first_root_child = None
    for v in order[1:]:
        p = parent[v]
        if p != root:
            edges.append((index[p], index[v]))
        elif first_root_child is None:
            first_root_child = v
        else:
            edges.append((index[first_root_child], index[v]))
    return TreeDecomposition(bags, tuple(edges))


def _cycle_td(g: Graph) -> TreeDecomposition:
    start = g.vertices[0]
    order = [start]
    prev, cur = start, min(g.neighbors(start))
    while cur != start:
        order.append(cur)
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    bags = tuple(frozenset((start, order[i], order[i + 1])) for i in range(1, len(order) - 1))
    return TreeDecomposition(bags, tuple((i, i + 1) for i in range(len(bags) - 1)))


def _merge(tds: list[TreeDecomposition]) -> tuple[list[frozenset[int]], list[tuple[int, int]], list[int]]:
    """Concatenate decompositions; returns bags, edges and each one's offset."""
    bags: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []
    offsets = []
    for td in tds:
        off = len(bags)
        offsets.append(off)
        bags.extend(td.bags)
        edges.extend((i + off, j + off) for i, j in td.edges)
    return bags, edges, offsets


def _first_bag_with(td: TreeDecomposition, vs: frozenset[int]) -> int:
    for i, b in enumerate(td.bags):
        if vs <= b:
            return i
    raise AssertionError(f"no bag contains {sorted(vs)}")


def _solve_triconnected(g: Graph, stats: TreewidthStats) -> tuple[int, TreeDecomposition]:
    h, old = g.relabeled()
    pg = embed(h)
    pst = PmcStats()
    pi = [p.vertices for p in pmcs(h, pg=pg, l=build_latching(pg), stats=pst)]
    stats.pmc_counts.append(len(pi))
    w, td = treewidth_from_pmcs(h, pi)
    bags = tuple(frozenset(old[v] for v in b) for b in td.bags)
    return w, TreeDecomposition(bags, td.edges)


def _solve_blocks(g: Graph, stats: TreewidthStats) -> tuple[int, TreeDecomposition]:
    blocks = biconnected_components(g)
    cuts = articulation_points(g)
    results = [_solve(g.subgraph(b), stats) for b in blocks]
    bags, edges, offsets = _merge([td for _, td in results])
    # walk the block-cut tree; each block is attached once, via the cut
    # vertex it was reached through
    anchor: dict[int, int] = {}
    visited = {0}
    queue = deque([0])
    while queue:
        bi = queue.popleft()
        td = results[bi][1]
        for c in sorted(blocks[bi] & cuts):
            if c in anchor:
                continue
            anchor[c] = offsets[bi] + _first_bag_with(td, frozenset([c]))
            for bj, other in enumerate(blocks):
                if bj not in visited and c in other:
                    visited.add(bj)
                    j = offsets[bj] + _first_bag_with(results[bj][1], frozenset([c]))
                    edges.append((anchor[c], j))
                    queue.append(bj)
    assert len(visited) == len(blocks)
    stats.pieces["blocks"] += 1
    return max(w for w, _ in results), TreeDecomposition(tuple(bags), tuple(edges))


def _solve_two_separator(g: Graph, s: frozenset[int], stats: TreewidthStats) -> tuple[int, TreeDecomposition]:
    a, b = sorted(s)
    results = []
    sizes = []
    for c in components(g, s):
        piece = g.subgraph(c.vertices | s)
        if not piece.has_edge(a, b):
            piece = piece.with_edges([(a, b)])
        if not is_planar(piece):
            raise AssertionError(f"piece at 2-separator {sorted(s)} is not planar")
        sizes.append(piece.n)
        results.append(_solve(piece, stats))
    bags, edges, offsets = _merge([td for _, td in results])
    hub = offsets[0] + _first_bag_with(results[0][1], s)
    for off, (_, td) in zip(offsets[1:], results[1:]):
        edges.append((hub, off + _first_bag_with(td, s)))
    td = TreeDecomposition(tuple(bags), tuple(edges))
    widths = tuple(w for w, _ in results)
    width = max(2, *widths)
    if td.width != width:
        raise AssertionError(f"recombined width {td.width} != {width} at {sorted(s)}")
    stats.splits.append(SplitRecord(s, tuple(sizes), widths, width))
    return width, td


def _solve(g: Graph, stats: TreewidthStats) -> tuple[int, TreeDecomposition]:
    """Connected graph with arbitrary vertex ids."""
    if is_clique(g, g.vertices):
        stats.pieces["clique"] += 1
        return g.n - 1, _single_bag(g)
    if g.m == g.n - 1:
        stats.pieces["tree"] += 1
        return 1, _tree_td(g)
    if g.m == g.n and all(g.degree(v) == 2 for v in g.vertices):
        stats.pieces["cycle"] += 1
        return 2, _cycle_td(g)
    if articulation_points(g):
        return _solve_blocks(g, stats)
    seps = two_separators(g)
    if seps:
        return _solve_two_separator(g, seps[0], stats)
    stats.pieces["triconnected"] += 1
    return _solve_triconnected(g, stats)


def treewidth_planar(g: Graph, stats: TreewidthStats | None = None) -> tuple[int, TreeDecomposition]:
    """Exact treewidth of a planar graph together with an optimal decomposition."""
    if g.n == 0:
        raise ValueError("treewidth of the empty graph is undefined")
    if not is_planar(g):
        raise NotPlanar("treewidth_planar requires a planar graph")
    stats = TreewidthStats() if stats is None else stats
    if is_connected(g):
        return _solve(g, stats)
    results = [_solve(g.subgraph(c.vertices), stats) for c in components(g)]
    bags, edges, offsets = _merge([td for _, td in results])
    edges.extend((offsets[i], offsets[i + 1]) for i in range(len(offsets) - 1))
    return max(w for w, _ in results), TreeDecomposition(tuple(bags), tuple(edges))
