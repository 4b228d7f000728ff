from hypernibble import Coloring, Hypergraph, verify_list, verify_proper
from hypernibble.verify import codegree_violations, soundness_counterexample

H = Hypergraph(5, [(0, 1, 2), (2, 3), (1, 3, 4)])


def test_proper_coloring_clean():
    rep = verify_proper(H, {0: "a", 1: "a", 2: "b", 3: "a", 4: "b"})
    assert rep.ok and not rep.partial


def test_monochromatic_edge_named():
    rep = verify_proper(H, {0: "a", 1: "a", 2: "a", 3: "b", 4: "b"})
    assert rep.monochromatic == [(0, 1, 2)]
    assert not rep.ok
    assert rep.to_json()["monochromatic"] == [[0, 1, 2]]


def test_partial_skips_uncolored_edges():
    rep = verify_proper(H, {0: "a", 1: "a", 3: "a"})
    assert rep.partial and rep.uncolored == [2, 4]
    assert rep.monochromatic == []


def test_list_violation():
    lists = {v: ["a", "b"] for v in range(5)}
    col = Coloring({0: "a", 1: "b", 2: "a", 3: "c", 4: "a"})
    rep = verify_list(H, lists, col)
    assert rep.list_violations == [(3, "c")]


def test_codegree_violations_scan():
    h = Hypergraph(6, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    bad = codegree_violations(h, lambda s, l: 2)
    assert bad == [((0, 1), 3, 3)]
    assert codegree_violations(h, lambda s, l: 3) == []


def test_soundness_counterexample():
    orig = Hypergraph(3, [(0, 1, 2)])
    cols = [{0: 0, 1: 1, 2: 2}, {0: 0, 1: 0, 2: 0}]
    assert soundness_counterexample(orig, Hypergraph(3, []), cols) == {0: 0, 1: 0, 2: 0}
    assert soundness_counterexample(orig, Hypergraph(3, [(0, 1)]), cols) is None
