import pytest
from hypothesis import given

from planar_pmc import generators as gen
from planar_pmc.chordless import chordless_cycles, is_chordless_cycle
from planar_pmc.graph import components, is_minimal_separator
from planar_pmc.latching import build_latching
from planar_pmc.minsep import minimal_separators, minimal_separators_avoiding
from planar_pmc.oracle import minseps_bruteforce
from planar_pmc.planar import embed

from .conftest import triconnected_corpus
from .strategies import triconnected_planar


def seps(g, l, v=None):
    stream = minimal_separators(g, l) if v is None else minimal_separators_avoiding(g, l, v)
    out = [ms.vertices for ms in stream]
    assert len(out) == len(set(out))
    return set(out)


def test_k4_has_none():
    k4 = gen.complete(4)
    l = build_latching(embed(k4))
    assert seps(k4, l) == set() == minseps_bruteforce(k4)
    assert all(seps(k4, l, v) == set() for v in range(4))


def test_octahedron(octahedron, octahedron_latching):
    got = seps(octahedron, octahedron_latching)
    assert got == minseps_bruteforce(octahedron)
    assert sum(1 for s in got if len(s) == 4) == 3
    for v in range(6):
        assert seps(octahedron, octahedron_latching, v) == {s for s in got if v not in s}


def test_cube(cube, cube_latching):
    got = seps(cube, cube_latching)
    assert got == minseps_bruteforce(cube)
    assert any(len(s) >= 4 for s in got)
    for v in range(8):
        assert seps(cube, cube_latching, v) == {s for s in got if v not in s}


def test_minsep_sides(cube, cube_latching):
    for ms in minimal_separators(cube, cube_latching):
        a, b = ms.sides
        assert ms.other_side(a) == b and ms.other_side(b.vertices) == a
        v = min(a.vertices)
        assert ms.side_containing(v) == a
        with pytest.raises(ValueError):
            ms.side_containing(min(ms.vertices))
        with pytest.raises(ValueError):
            ms.other_side(frozenset())
        assert len(ms) == len(ms.vertices)


def check_graph(g):
    l = build_latching(embed(g))
    expected = minseps_bruteforce(g)
    emitted = list(minimal_separators(g, l))
    assert {ms.vertices for ms in emitted} == expected
    for ms in emitted:
        comps = components(g, ms.vertices)
        assert len(comps) == 2
        assert all(c.neighborhood == ms.vertices for c in comps)
        assert is_chordless_cycle(l.graph, ms.cycle_order)
    # every chordless cycle of L: on four or more vertices it always
    # separates, a triangle does exactly when both sides are nonempty
    for cyc in chordless_cycles(l.graph):
        s = frozenset(cyc)
        if len(s) >= 4:
            assert s in expected
        assert (s in expected) == is_minimal_separator(g, s)
    # and conversely every minimal separator is such a cycle
    cyc_sets = {frozenset(c) for c in chordless_cycles(l.graph)}
    assert expected <= cyc_sets
    for v in g.vertices:
        got = [ms.vertices for ms in minimal_separators_avoiding(g, l, v)]
        assert len(got) == len(set(got))
        assert set(got) == {s for s in expected if v not in s}


def test_corpus_up_to_10():
    graphs = [c.graph for c in triconnected_corpus(10)]
    assert len(graphs) >= 30
    for g in graphs:
        check_graph(g)


@given(triconnected_planar(max_n=11))
def test_random(g):
    check_graph(g)
