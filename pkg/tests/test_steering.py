import random
from itertools import combinations

from hypothesis import given, strategies as st

from planar_pmc import generators as gen
from planar_pmc.graph import Graph, is_pmc
from planar_pmc.latching import build_latching
from planar_pmc.oracle import steering_partitions_bruteforce
from planar_pmc.planar import embed, is_biconnected
from planar_pmc.steering import (SteeringCertificate, check_certificate, cycle_order,
                                 find_certificate, is_pmc_by_steering, is_slot, is_steering,
                                 steering_certificates)

from .strategies import graphs, triconnected_planar


def test_is_slot_examples():
    c5 = (0, 1, 2, 3, 4)
    assert is_slot(c5, {2})
    assert is_slot(c5, {0, 1})
    assert is_slot(c5, {4, 0})
    assert not is_slot(c5, {0, 2})
    assert not is_slot((0, 1, 2, 3), {0, 1, 2})
    assert not is_slot(c5, set())
    assert not is_slot(c5, {7})


def test_cycle_order():
    assert cycle_order(gen.cycle(5), range(5)) == (0, 1, 2, 3, 4)
    assert cycle_order(gen.wheel(4), range(4)) == (0, 1, 2, 3)
    assert cycle_order(gen.wheel(4), range(5)) is None
    two = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert cycle_order(two, range(6)) is None


def test_wheel_certificate():
    w = gen.wheel(4)
    assert check_certificate(w, SteeringCertificate((0, 1, 2, 3), (4,)))
    assert SteeringCertificate((0, 1, 2, 3), (4,)).wheel


def test_slot_attachment_is_not_a_steering():
    # apex sees only the cycle edge {0, 1}
    h = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
    assert not check_certificate(h, SteeringCertificate((0, 1, 2, 3), (4,)))
    assert find_certificate(h) is None


def test_path_end_with_non_slot_attachment():
    # cycle 0..5, path 6-7; end 6 sees {0, 2}, which is not a slot
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (6, 0), (6, 2), (7, 4)]
    h = Graph.from_edges(8, edges)
    assert not check_certificate(h, SteeringCertificate((0, 1, 2, 3, 4, 5), (6, 7)))
    # moving the end's second contact next to the first makes it valid
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (6, 0), (6, 1), (7, 4)]
    h = Graph.from_edges(8, edges)
    assert check_certificate(h, SteeringCertificate((0, 1, 2, 3, 4, 5), (6, 7)))


def test_internal_path_vertex_must_avoid_cycle():
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (4, 0), (6, 2), (5, 1)]
    h = Graph.from_edges(7, edges)
    assert not check_certificate(h, SteeringCertificate((0, 1, 2, 3), (4, 5, 6)))


def test_find_certificate_examples():
    cert = find_certificate(gen.complete(4))
    assert cert is not None and cert.P == (0,) and set(cert.S) == {1, 2, 3}
    assert find_certificate(gen.cycle(6)) is None
    assert not is_steering(gen.cycle(6))


def test_second_bipartition():
    # in a 4-wheel, the rim-vertex reading fails but the hub reading works
    w = gen.wheel(4)
    assert not check_certificate(w, SteeringCertificate((0, 1, 4, 3), (2,)))
    ps = {c.P for c in steering_certificates(w)}
    assert (4,) in ps
    # two adjacent rim vertices also form a valid path reading over the
    # triangle left behind, and it is lexicographically first
    assert find_certificate(w).P == (0, 1)
    # a theta graph has a path reading and two wheel readings
    theta = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 2)])
    ps = {c.P for c in steering_certificates(theta)}
    assert ps == {(1,), (3,), (4, 5)}
    assert find_certificate(theta).P == (1,)


def test_pmc_by_steering_examples(cube, cube_latching, octahedron, octahedron_latching):
    face = cube_latching.faces[0].vertex_set
    assert not is_pmc_by_steering(cube_latching, face)
    assert not is_pmc(cube, face)
    k4 = gen.complete(4)
    assert is_pmc_by_steering(build_latching(embed(k4)), range(4))
    for r in range(4, 7):
        for x in combinations(range(6), r):
            assert is_pmc_by_steering(octahedron_latching, x) == is_pmc(octahedron, x)


@given(graphs(min_n=3, max_n=9))
def test_certificates_match_bruteforce(h):
    certs = steering_certificates(h)
    assert {frozenset(c.P) for c in certs} == steering_partitions_bruteforce(h)
    for c in certs:
        assert check_certificate(h, c)
        assert is_biconnected(h)
    if certs:
        assert find_certificate(h) == certs[0]


@given(triconnected_planar(max_n=14), st.integers(0, 2**16))
def test_certificates_on_latching_subgraphs(g, seed):
    l = build_latching(embed(g))
    rng = random.Random(seed)
    for _ in range(20):
        x = rng.sample(g.vertices, rng.randint(4, min(g.n, 12)))
        h = l.induced(x)
        assert {frozenset(c.P) for c in steering_certificates(h)} == \
            steering_partitions_bruteforce(h)
