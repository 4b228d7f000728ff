from itertools import combinations

import pytest

from hypernibble import gen_linear, gen_mixed, gen_uniform, make_triangle_free, random_lists
from hypernibble.verify import brute_has_triangle


def test_uniform_shape_and_determinism():
    h = gen_uniform(30, 4, 100, seed=2)
    assert len(h) == 100 and all(len(e) == 4 for e in h.edges)
    assert gen_uniform(30, 4, 100, seed=2) == h
    assert gen_uniform(30, 4, 100, seed=3) != h


def test_uniform_infeasible():
    with pytest.raises(ValueError):
        gen_uniform(5, 3, 11)
    assert len(gen_uniform(5, 3, 10)) == 10


def test_mixed_counts():
    h = gen_mixed(20, {2: 5, 3: 7, 4: 2}, seed=1)
    assert [len(h.edges_of_size(s)) for s in (2, 3, 4)] == [5, 7, 2]
    assert h.rank == 4


@pytest.mark.parametrize("seed", range(5))
def test_triangle_free_postprocess(seed):
    h = gen_uniform(12, 3, 25, seed=seed)
    tf = make_triangle_free(h, seed=seed)
    assert not brute_has_triangle(tf)
    assert tf.edge_set <= h.edge_set


def test_linear_pairwise_meets():
    h = gen_linear(15, 3, 20, seed=4)
    assert len(h) == 20
    for e, f in combinations(h.edges, 2):
        assert len(set(e) & set(f)) <= 1


def test_linear_short_packing_warns(caplog):
    # at most 7 lines fit on 7 points
    h = gen_linear(7, 3, 9, seed=0, restarts=20)
    assert len(h) <= 7
    assert "linear packing" in caplog.text


def test_random_lists():
    lists = random_lists(10, 4, 9, seed=1)
    assert all(len(set(l)) == 4 and set(l) <= {f"c{x}" for x in range(9)} for l in lists.values())
    assert random_lists(10, 4, 9, seed=1) == lists
    with pytest.raises(ValueError):
        random_lists(3, 5, 4)
