import logging

import pytest
from hypothesis import given

from planar_pmc import generators as gen
from planar_pmc.errors import NotTriconnected
from planar_pmc.graph import Graph, components, is_pmc, neighborhood
from planar_pmc.latching import build_latching
from planar_pmc.meter import WorkMeter
from planar_pmc.minsep import _as_minsep, minimal_separators
from planar_pmc.oracle import pmcs_bruteforce
from planar_pmc.planar import embed
from planar_pmc.pmc import (PmcStats, Port, graph_A, graph_B, hinges, is_arch, pmc_sets, pmcs,
                            pmcs_for_component, ports, valid_pairs, vertices_A, vertices_B)
from planar_pmc.steering import check_certificate, cycle_order, is_slot

from .conftest import triconnected_corpus
from .strategies import triconnected_planar


def big_seps(g, l):
    return [ms for ms in minimal_separators(g, l) if len(ms) >= 4]


def per_component_oracle(g, c_vertices):
    return {x for x in pmcs_bruteforce(g)
            if any(c.vertices == c_vertices for c in components(g, x))}


def test_k4():
    out = list(pmcs(gen.complete(4)))
    assert [p.vertices for p in out] == [frozenset(range(4))]
    assert out[0].category == "K4"


def test_tiny_cliques():
    assert [p.vertices for p in pmcs(gen.complete(3))] == [frozenset(range(3))]
    assert [p.vertices for p in pmcs(gen.complete(1))] == [frozenset([0])]
    assert list(pmcs(Graph({}))) == []


def test_not_triconnected():
    with pytest.raises(NotTriconnected):
        list(pmcs(gen.grid(3, 3)))
    with pytest.raises(NotTriconnected):
        list(pmcs(gen.path(3)))


def test_octahedron_and_icosahedron(octahedron):
    for g in (octahedron, gen.icosahedron()):
        raw = [p.vertices for p in pmcs(g)]
        assert len(raw) == len(set(raw))
        assert set(raw) == pmcs_bruteforce(g)


def test_valid_pair_rules():
    cyc = (0, 1, 2, 3, 4, 5)

    class S:
        cycle_order = cyc

    p = lambda v, *slot: Port(v, frozenset(slot))  # noqa: E731
    # non-adjacent singletons: valid; a hinge iff they share a cycle neighbour
    (vp,) = valid_pairs([p(10, 0), p(11, 2)], S)
    assert vp.hinges == (1,)
    (vp,) = valid_pairs([p(10, 0), p(11, 3)], S)
    assert vp.hinges == ()
    # overlapping edges spanning three consecutive vertices
    (vp,) = valid_pairs([p(10, 0, 1), p(11, 1, 2)], S)
    assert vp.hinges == (1,)
    # identical or adjacent singletons give a slot
    assert valid_pairs([p(10, 0, 1), p(11, 0, 1)], S) == []
    assert valid_pairs([p(10, 0), p(11, 1)], S) == []
    assert hinges(S, frozenset({5}), frozenset({1})) == (0,)


def test_ports_cube(cube, cube_latching):
    l = cube_latching
    for ms in big_seps(cube, l):
        for c in ms.sides:
            cp = ms.other_side(c).vertices
            got = ports(cube, l, ms, c)
            expected = [u for u in sorted(cp)
                        if l.neighbors(u) & ms.vertices
                        and is_slot(ms.cycle_order, l.neighbors(u) & ms.vertices)]
            assert [q.vertex for q in got] == expected
            assert all(len(q.slot) <= 2 for q in got)


def _aux_checks(g, l):
    seen_hinge = False
    for ms in big_seps(g, l):
        for c in ms.sides:
            cp = ms.other_side(c).vertices
            core = cp - neighborhood(l.graph, ms.vertices)
            for vp in valid_pairs(ports(g, l, ms, c), ms):
                u1, u2 = vp.u1.vertex, vp.u2.vertex
                assert vertices_A(l, ms, c, u1, u2) == core | {u1, u2}
                assert graph_A(l, ms, c, u1, u2).vertex_set() == core | {u1, u2}
                for s in vp.hinges:
                    seen_hinge = True
                    loose = vertices_B(l, ms, c, u1, u2, s)
                    assert loose == core | {u1, u2} | (l.neighbors(s) & cp)
                    strict = vertices_B(l, ms, c, u1, u2, s, strict=True)
                    assert core | {u1, u2} <= strict <= loose
                    assert all(l.neighbors(w) & ms.vertices == {s} for w in strict - core - {u1, u2})
                    assert graph_B(l, ms, c, u1, u2, s).vertex_set() == loose
                non_hinges = set(ms.vertices) - set(vp.hinges)
                with pytest.raises(ValueError):
                    graph_B(l, ms, c, u1, u2, min(non_hinges))
    return seen_hinge


def test_auxiliary_graphs(cube, cube_latching):
    _aux_checks(cube, cube_latching)
    seen = False
    for c in triconnected_corpus(10):
        seen |= _aux_checks(c.graph, build_latching(embed(c.graph)))
    assert seen
    ms = big_seps(cube, cube_latching)[0]
    with pytest.raises(ValueError):
        vertices_A(cube_latching, ms, ms.sides[0], 0, 0)


def test_per_component_streams(cube, octahedron):
    for g in (octahedron, cube):
        l = build_latching(embed(g))
        for ms in big_seps(g, l):
            for c in ms.sides:
                got = [p.vertices for p in pmcs_for_component(g, l, ms, c)]
                assert got, "Pi(G, C) is never empty"
                assert len(got) == len(set(got))
                assert set(got) == per_component_oracle(g, c.vertices)
    l = build_latching(embed(g))
    small = next(ms for ms in minimal_separators(g, l) if len(ms) == 3)
    with pytest.raises(ValueError):
        list(pmcs_for_component(g, l, small, small.sides[0]))


def arch_check(g, l, p):
    for c in components(g, p.vertices):
        s = c.neighborhood
        if len(s) < 4:
            continue
        ms = _as_minsep(g, cycle_order(l.graph, s), None)
        assert ms is not None
        assert is_arch(l, ms, p.vertices - s)


def check_graph(g, check_arch=True):
    l = build_latching(embed(g))
    st = PmcStats()
    meter = WorkMeter()
    out = list(pmcs(g, l=l, stats=st, meter=meter, check_invariants=True))
    raw = [p.vertices for p in out]
    assert len(raw) == len(set(raw))
    assert set(raw) == pmcs_bruteforce(g)
    assert st.emitted == len(out) == sum(st.by_category.values())
    assert st.filter_rejections == 0
    assert st.empty_components == 0
    assert st.per_vertex_duplicates == 0
    assert st.top.invariant_violations == 0 and st.inner_invariant_violations == 0
    assert st.top.delay_bound_holds()
    assert len(meter.gaps) == len(out) + 1
    for p in out:
        assert p.category in {"K4", "wheel", "path", "hinge"}
        h = l.induced(p.vertices)
        assert check_certificate(h, p.certificate)
        if p.category == "K4":
            assert len(p.vertices) == 4 and h.m == 6
        else:
            assert p.component is not None
            assert p.component.neighborhood <= p.vertices
            assert len(p.component.neighborhood) >= 4
        if check_arch:
            arch_check(g, l, p)
    # no PMC contains another
    sets = sorted(raw, key=len)
    for i, a in enumerate(sets):
        assert not any(a < b for b in sets[i + 1:])
    return st


def test_corpus_exact():
    cats = set()
    for c in triconnected_corpus(10):
        cats |= set(check_graph(c.graph).by_category)
    assert {"K4", "wheel", "path", "hinge"} <= cats


def test_loose_hinge_reading_same_output(caplog):
    for c in triconnected_corpus(10)[:25]:
        with caplog.at_level(logging.ERROR):
            assert pmc_sets(c.graph, strict_hinge=False) == pmc_sets(c.graph)


@given(triconnected_planar(max_n=11))
def test_random(g):
    check_graph(g)


def test_every_emitted_set_is_a_pmc_on_a_larger_graph():
    import random
    g = gen.random_triconnected_planar(24, random.Random(5), kind="hull")
    for p in pmcs(g):
        assert is_pmc(g, p.vertices)
