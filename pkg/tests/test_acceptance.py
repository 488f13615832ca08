"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them in the terminal summary, and they are also printed directly for
``pytest -s``.
"""

import contextlib
import random
import time
from itertools import combinations

import pytest
from scipy.stats import linregress

from planar_pmc import generators as gen
from planar_pmc.chordless import chordless_cycles, chordless_paths
from planar_pmc.errors import MultiEdge
from planar_pmc.graph import Graph, full_components, is_connected, is_pmc
from planar_pmc.latching import build_latching
from planar_pmc.meter import WorkMeter
from planar_pmc.minsep import minimal_separators, minimal_separators_avoiding
from planar_pmc.oracle import (chordless_cycles_bruteforce, chordless_paths_bruteforce,
                               minseps_bruteforce, pmcs_bruteforce, treewidth_bruteforce)
from planar_pmc.planar import embed, faces, is_biconnected, is_planar, two_separators
from planar_pmc.pmc import PmcStats, pmcs
from planar_pmc.polydelay import UnionStats, union_generate
from planar_pmc.steering import is_pmc_by_steering
from planar_pmc.treewidth import TreewidthStats, treewidth_planar, validate_td

from .conftest import cached_corpus, triconnected_corpus

RESULTS: dict[int, str] = {}


@contextlib.contextmanager
def criterion(k: int, title: str):
    """Record PASS with the details the body fills in, or FAIL with the error."""
    detail: list[str] = []
    t0 = time.perf_counter()
    try:
        yield detail
    except BaseException as e:
        line = f"criterion {k} FAIL  {title}: {type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}"
        RESULTS[k] = line
        print(line)
        raise
    line = f"criterion {k} PASS  {title}: {'; '.join(detail)} ({time.perf_counter() - t0:.1f}s)"
    RESULTS[k] = line
    print(line)


def test_1_pmc_exactness():
    with criterion(1, "pmcs == brute force on triconnected corpus n<=12") as d:
        graphs = triconnected_corpus(12)
        names = {c.name for c in graphs}
        assert len(graphs) >= 50, len(graphs)
        assert {"octahedron", "icosahedron"} <= names
        assert sum(name.startswith("random-") for name in names) >= 30
        total = 0
        for c in graphs:
            raw = [p.vertices for p in pmcs(c.graph)]
            assert len(raw) == len(set(raw)), f"duplicate emission on {c.name}"
            assert set(raw) == pmcs_bruteforce(c.graph), c.name
            total += len(raw)
        d.append(f"{len(graphs)} graphs, {total} PMCs, 0 duplicates")


def test_2_characterization():
    with criterion(2, "steering test == PMC test on every subset, n<=10") as d:
        graphs = triconnected_corpus(10)
        checked = 0
        for c in graphs:
            g = c.graph
            l = build_latching(embed(g))
            for r in range(g.n + 1):
                for x in combinations(g.vertices, r):
                    assert is_pmc_by_steering(l, x) == is_pmc(g, x), (c.name, x)
                    checked += 1
        d.append(f"{len(graphs)} graphs, {checked} subsets")


def test_3_minimal_separators():
    with criterion(3, "minimal separator streams == brute force, plain and avoiding v") as d:
        graphs = triconnected_corpus(12)
        streams = 0
        for c in graphs:
            g = c.graph
            l = build_latching(embed(g))
            oracle = minseps_bruteforce(g)
            raw = [ms.vertices for ms in minimal_separators(g, l)]
            assert len(raw) == len(set(raw)) and set(raw) == oracle, c.name
            for v in g.vertices:
                raw_v = [ms.vertices for ms in minimal_separators_avoiding(g, l, v)]
                assert len(raw_v) == len(set(raw_v))
                assert set(raw_v) == {s for s in oracle if v not in s}, (c.name, v)
            streams += 1 + g.n
            for s in oracle:
                assert len(full_components(g, s)) == 2, (c.name, sorted(s))
        d.append(f"{len(graphs)} graphs, {streams} streams")


def test_4_treewidth():
    with criterion(4, "treewidth_planar == subset DP on planar corpus n<=14 plus 4x4 grid") as d:
        items = [c for c in cached_corpus(14) if c.n >= 1]
        items = [(c.name, c.graph) for c in items] + [("grid4x4", gen.grid(4, 4))]
        names = {name for name, _ in items}
        assert {"grid3x3", "grid3x4", "grid4x4", "theta-3-3-4"} <= names
        assert any(name.startswith("glued-") for name in names)
        splits = 0
        for name, g in items:
            assert is_planar(g)
            st = TreewidthStats()
            w, td = treewidth_planar(g, st)
            assert w == treewidth_bruteforce(g), name
            assert validate_td(g, td) and td.width == w, name
            for rec in st.splits:
                assert rec.width == max(2, *rec.child_widths)
            splits += len(st.splits)
        assert treewidth_planar(gen.complete(4))[0] == 3
        assert treewidth_planar(gen.random_tree(14, random.Random(0)))[0] == 1
        assert treewidth_planar(gen.grid(3, 3))[0] == 3
        d.append(f"{len(items)} graphs, {splits} two-separator splits, spot values ok")


def test_5_scheduler():
    with criterion(5, "union_generate on 1000 random families") as d:
        rng = random.Random(2024)
        loop_heads = suppressions = 0
        for _ in range(1000):
            k = rng.randint(1, 8)
            universe = list(range(rng.randint(1, 40)))
            fams = [rng.sample(universe, rng.randint(0, len(universe))) for _ in range(k)]
            sets = [set(f) for f in fams]
            st = UnionStats()
            out = list(union_generate([list(f) for f in fams], lambda s, i: s in sets[i], st,
                                      check_invariants=True))
            assert len(out) == len(set(out))
            assert set(out) == set().union(*sets)
            assert st.invariant_violations == 0
            assert st.suppressions_without_live_successor == 0
            assert st.delay_bound_holds()
            loop_heads += st.loop_heads
            suppressions += st.suppressed
        d.append(f"{loop_heads} loop-head checks, {suppressions} suppressions, 0 violations")


LADDER = (20, 40, 80, 160)


def _fit(sizes, gaps):
    from math import log
    r = linregress([log(n) for n in sizes], [log(g) for g in gaps])
    return r.slope, r.rvalue ** 2


@pytest.mark.slow
def test_6_delay_ladder():
    with criterion(6, "max delay vs n on random triconnected graphs, slope<=4, R^2>=0.9") as d:
        # stacked graphs: full enumeration, so the gap to termination counts
        full = []
        for n in LADDER:
            g = gen.random_triconnected_planar(n, random.Random(n), kind="stacked")
            meter, st = WorkMeter(), PmcStats()
            k = sum(1 for _ in pmcs(g, meter=meter, stats=st))
            assert len(meter.gaps) == k + 1
            full.append(meter.max_gap)
        # hull graphs: |Pi| grows too fast to finish, so the first 200 emissions
        capped = []
        for n in LADDER:
            worst = 0
            for seed in (n, n + 1):
                g = gen.random_triconnected_planar(n, random.Random(seed), kind="hull")
                meter = WorkMeter()
                for i, _ in enumerate(pmcs(g, meter=meter)):
                    if i + 1 >= 200:
                        break
                worst = max(worst, meter.max_gap)
            capped.append(worst)
        s1, r1 = _fit(LADDER, full)
        s2, r2 = _fit(LADDER, capped)
        d.append(f"full runs gaps {full} slope {s1:.2f} R^2 {r1:.3f}")
        d.append(f"capped runs gaps {capped} slope {s2:.2f} R^2 {r2:.3f}")
        assert s1 <= 4 and r1 >= 0.9, (s1, r1)
        assert s2 <= 4 and r2 >= 0.9, (s2, r2)


def test_7_chordless():
    with criterion(7, "chordless cycles and paths == brute force, n<=10") as d:
        graphs = [c for c in cached_corpus(10) if c.n >= 1]
        cycles = paths = 0
        for c in graphs:
            g = c.graph
            raw = list(chordless_cycles(g))
            assert len(raw) == len(set(raw))
            assert set(raw) == chordless_cycles_bruteforce(g), c.name
            cycles += len(raw)
            for s, t in combinations(g.vertices, 2):
                raw = list(chordless_paths(g, s, t))
                assert len(raw) == len(set(raw))
                assert set(raw) == chordless_paths_bruteforce(g, s, t), (c.name, s, t)
                paths += len(raw)
        d.append(f"{len(graphs)} graphs, {cycles} cycles, {paths} paths")


def _predicts_parallel(g: Graph) -> bool:
    """Some face chord is a graph edge or a chord of a second face."""
    seen = {frozenset(e) for e in g.edges()}
    for f in faces(embed(g)):
        k = len(f.boundary)
        for i, j in combinations(range(k), 2):
            if j - i == 1 or (i == 0 and j == k - 1):
                continue
            key = frozenset((f.boundary[i], f.boundary[j]))
            if key in seen:
                return True
            seen.add(key)
    return False


def test_8_latching_structure():
    with criterion(8, "latching: cube 24 edges, octahedron L=G, MultiEdge where predicted") as d:
        cube, octa = gen.cube(), gen.octahedron()
        lc = build_latching(embed(cube))
        assert lc.graph.m == 24 and len(lc.chords()) == 12
        assert len({frozenset(e) for e in lc.graph.edges()}) == 24
        assert build_latching(embed(octa)).graph == octa
        constructed = [c.graph for c in cached_corpus(12)
                       if c.n >= 4 and c.biconnected and not c.triconnected]
        constructed += [gen.cycle(4), gen.cycle(7), gen.grid(3, 3), gen.theta((2, 2, 2)),
                        Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])]
        raised = 0
        for g in constructed:
            assert is_biconnected(g) and is_connected(g)
            assert _predicts_parallel(g)
            with pytest.raises(MultiEdge) as info:
                build_latching(embed(g))
            assert frozenset(info.value.pair) in two_separators(g)
            raised += 1
        for c in triconnected_corpus(12):
            assert not _predicts_parallel(c.graph)
        d.append(f"{raised} non-triconnected biconnected inputs raised MultiEdge")
