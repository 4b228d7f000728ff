from itertools import combinations

import pytest
from hypothesis import given, settings

from hypernibble import Hypergraph, TriangleWitness
from hypernibble.verify import (brute_codegree, brute_degree, brute_has_triangle,
                                brute_max_codegree, brute_triangles)

from conftest import hypergraphs, random_hypergraph

# a=0 b=1 c=2 d=3 e=4
C3 = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
F5 = Hypergraph(5, [(0, 1, 2), (0, 1, 3), (2, 3, 4)])
K4_MINUS = Hypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
NOT_TRIANGLE = Hypergraph(5, [(0, 1, 2), (1, 2, 3), (0, 2, 4)])


@pytest.mark.parametrize("h", [C3, F5, K4_MINUS], ids=["C3", "F5", "K4-"])
def test_named_triangles(h):
    wit = h.find_triangle()
    assert wit is not None and wit.is_valid()
    assert brute_triangles(h)


def test_shared_vertex_is_not_a_triangle():
    # every candidate u, v, w choice hits c, which lies in all three edges
    assert NOT_TRIANGLE.find_triangle() is None
    assert not brute_triangles(NOT_TRIANGLE)


def test_witness_validity_rules():
    assert TriangleWitness(((0, 1), (1, 2), (0, 2)), (0, 1, 2)).is_valid()
    assert not TriangleWitness(((0, 1), (0, 1), (0, 2)), (0, 1, 2)).is_valid()
    assert not TriangleWitness(((0, 1, 2), (1, 2, 3), (0, 2, 4)), (0, 1, 2)).is_valid()


def test_validation_errors():
    with pytest.raises(ValueError, match="repeats"):
        Hypergraph(4, [(0, 0, 1)])
    with pytest.raises(ValueError, match="fewer than 2"):
        Hypergraph(4, [(1,)])
    with pytest.raises(ValueError, match="outside"):
        Hypergraph(4, [(0, 4)])
    with pytest.raises(ValueError, match="exceeds rank"):
        Hypergraph(4, [(0, 1, 2)], rank=2)
    with pytest.raises(ValueError, match="duplicate"):
        Hypergraph(4, [(0, 1), (1, 0)])
    assert len(Hypergraph(4, [(0, 1), (1, 0)], allow_dup=True)) == 1
    with pytest.raises(ValueError, match="contains"):
        Hypergraph(4, [(0, 1), (0, 1, 2)], antichain=True)


def test_codegree_query_errors():
    h = Hypergraph(5, [(0, 1, 2)])
    with pytest.raises(ValueError):
        h.codegree((0, 1, 2), 3)
    with pytest.raises(ValueError):
        h.degree(7, 3)


def test_neighborhood_depths():
    h = Hypergraph(6, [(0, 1), (1, 2, 3), (3, 4)])
    assert h.neighborhood(0) == {1}
    # depth 2 is the union of the neighbours' neighbourhoods, so 0 comes back
    assert h.neighborhood(0, 2) == {0, 2, 3}
    assert h.neighborhood(5) == set()


@settings(max_examples=150, deadline=None)
@given(hypergraphs())
def test_degrees_match_scan(h):
    for v in range(h.num_vertices):
        for size in range(2, h.rank + 1):
            assert h.degree(v, size) == brute_degree(h, v, size)
    for size in range(3, h.rank + 1):
        for s in range(2, size):
            for S in combinations(range(h.num_vertices), s):
                assert h.codegree(S, size) == brute_codegree(h, S, size)
            assert h.degree_profile().codelta(s, size) == brute_max_codegree(h, s, size)


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=8, max_edges=10))
def test_triangle_detector_matches_oracle(h):
    wit = h.find_triangle()
    assert (wit is None) == (not brute_has_triangle(h))
    if wit is not None:
        assert wit.is_valid()
        assert wit in brute_triangles(h)


def test_linear_triple_systems_detected(rng):
    # Fano plane: every two lines meet, so triangles abound
    fano = Hypergraph(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])
    assert fano.find_triangle() is not None
    for _ in range(20):
        h = random_hypergraph(rng, 10, 3, 8)
        assert h.is_triangle_free() == (not brute_triangles(h))


def test_equality_and_containment():
    a = Hypergraph(4, [(2, 1), (0, 3)])
    b = Hypergraph(4, [(0, 3), (1, 2)])
    assert a == b and hash(a) == hash(b)
    assert (1, 2) in a and (2, 1) in a
    assert a.edges == ((0, 3), (1, 2))
