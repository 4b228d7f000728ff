import json

import pytest

from hypernibble import Hypergraph
from hypernibble.cli import main
from hypernibble.io import load_instance
from hypernibble.verify import brute_has_triangle, codegree_violations


def run(*args):
    return main([str(a) for a in args])


@pytest.fixture
def inst(tmp_path):
    out = tmp_path / "h.json"
    assert run("generate", "--n", 60, "--k", 3, "--m", 200, "--seed", 1,
               "--lists-size", 20, "--pool", 30, "--out", out) == 0
    return out, tmp_path / "h.lists.json"


def test_generate_triangle_free(tmp_path):
    out = tmp_path / "g.json"
    assert run("generate", "--n", 20, "--k", 3, "--m", 30, "--seed", 1, "--triangle-free", "--out", out) == 0
    assert not brute_has_triangle(load_instance(out))


def test_generate_over_capacity(tmp_path, capsys):
    assert run("generate", "--n", 5, "--k", 3, "--m", 11, "--out", tmp_path / "x.json") == 2
    assert "cannot place" in capsys.readouterr().err


def test_generate_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run("generate", "--n", 30, "--k", 3, "--m", 40, "--seed", 5, "--linear", "--out", p)
    assert a.read_bytes() == b.read_bytes()


def test_reduce_example_trace(tmp_path):
    h, pol = tmp_path / "h.json", tmp_path / "p.json"
    h.write_text(json.dumps({"num_vertices": 5, "rank": 3, "edges": [[1, 2, 3], [1, 2, 4]]}))
    pol.write_text(json.dumps({"thresholds": [[2, 3, 2]]}))
    assert run("reduce", "--instance", h, "--policy", pol, "--out", tmp_path / "r.json",
               "--trace-out", tmp_path / "t.json") == 0
    trace = json.loads((tmp_path / "t.json").read_text())
    assert [c["set"] for r in trace["rounds"] for c in r["contractions"]] == [[1, 2]]
    assert load_instance(tmp_path / "r.json").edges == ((1, 2),)


def test_reduce_identity_policy(inst, tmp_path):
    h, _ = inst
    pol = tmp_path / "p.json"
    pol.write_text(json.dumps({"base": 1000}))
    run("reduce", "--instance", h, "--policy", pol, "--out", tmp_path / "r.json")
    assert load_instance(tmp_path / "r.json") == load_instance(h)


def test_reduce_bad_policy(inst, tmp_path):
    h, _ = inst
    pol = tmp_path / "p.json"
    pol.write_text(json.dumps({"thresholds": [[2, 3, 0.5]]}))
    assert run("reduce", "--instance", h, "--policy", pol, "--out", tmp_path / "r.json") == 2


def test_balanced_then_verify(tmp_path):
    h = tmp_path / "h.json"
    h.write_text(json.dumps({"num_vertices": 1002, "rank": 3,
                             "edges": [[0, 1, x] for x in range(2, 1002)]}))
    assert run("reduce", "--instance", h, "--balanced", "--out", tmp_path / "r.json",
               "--trace-out", tmp_path / "t.json") == 0
    assert load_instance(tmp_path / "r.json").edges == ((0, 1),)
    assert run("verify", "--instance", tmp_path / "r.json", "--codegree-bounds", tmp_path / "t.json") == 0
    # the input itself breaks the balanced bound
    assert run("verify", "--instance", h, "--codegree-bounds", tmp_path / "t.json") == 1


def test_color_verify_stats(inst, tmp_path, capsys):
    h, lists = inst
    col, trace = tmp_path / "c.json", tmp_path / "t.csv"
    assert run("color", "--instance", h, "--lists", lists, "--relax", "--colors", 20,
               "--seed", 3, "--trace", trace, "--out", col) == 0
    assert run("verify", "--instance", h, "--coloring", col, "--lists", lists) == 0
    n_rows = len(trace.read_text().splitlines()) - 1
    globals_ = json.loads(trace.with_suffix(".globals.json").read_text())
    assert n_rows == len(globals_) * 60
    capsys.readouterr()
    assert run("stats", "--trace", trace, "--globals", trace.with_suffix(".globals.json")) == 0
    summary = json.loads(capsys.readouterr().out)
    zs = [s["zeta"] for s in summary]
    step = zs[0] - zs[1]
    assert all(z == pytest.approx(zs[0] - i * step, rel=1e-9) for i, z in enumerate(zs))


def test_color_same_seed_same_file(inst, tmp_path):
    h, lists = inst
    outs = [tmp_path / "a.json", tmp_path / "b.json"]
    for o in outs:
        run("color", "--instance", h, "--lists", lists, "--relax", "--seed", 8, "--out", o)
    assert outs[0].read_bytes() == outs[1].read_bytes()


def test_color_no_edges(tmp_path):
    h = tmp_path / "e.json"
    h.write_text(json.dumps({"num_vertices": 4, "rank": 3, "edges": []}))
    assert run("color", "--instance", h, "--colors", 3, "--relax", "--out", tmp_path / "c.json") == 0
    cols = json.loads((tmp_path / "c.json").read_text())["colors"]
    assert set(cols) == {"0", "1", "2", "3"} and set(cols.values()) <= {"c0", "c1", "c2"}


def test_color_completion_failure(tmp_path, capsys):
    h, lists = tmp_path / "h.json", tmp_path / "l.json"
    h.write_text(json.dumps({"num_vertices": 2, "rank": 2, "edges": [[0, 1]]}))
    lists.write_text(json.dumps({"lists": {"0": ["x"], "1": ["x"]}}))
    assert run("color", "--instance", h, "--lists", lists, "--relax", "--phi1", 1.0,
               "--max-resamples", 3, "--fallback", "fail", "--out", tmp_path / "c.json") == 3
    assert json.loads(capsys.readouterr().out)["vertices"] == [0, 1]


def test_strict_mode_short_lists_is_input_error(inst, tmp_path):
    h, lists = inst
    assert run("color", "--instance", h, "--lists", lists, "--out", tmp_path / "c.json") == 2


def test_verify_injected_monochromatic(tmp_path, capsys):
    h, c = tmp_path / "h.json", tmp_path / "c.json"
    h.write_text(json.dumps({"num_vertices": 3, "rank": 3, "edges": [[0, 1, 2]]}))
    c.write_text(json.dumps({"colors": {"0": "a", "1": "a", "2": "a"}}))
    assert run("verify", "--instance", h, "--coloring", c) == 1
    assert json.loads(capsys.readouterr().out)["coloring"]["monochromatic"] == [[0, 1, 2]]


def test_verify_triangle_flag(tmp_path):
    h = tmp_path / "h.json"
    h.write_text(json.dumps({"num_vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}))
    assert run("verify", "--instance", h, "--triangle-free") == 1


def test_verify_reduced_against_policy(inst, tmp_path):
    h, _ = inst
    pol = tmp_path / "p.json"
    pol.write_text(json.dumps({"base": 1.5}))
    run("reduce", "--instance", h, "--policy", pol, "--out", tmp_path / "r.json")
    assert run("verify", "--instance", tmp_path / "r.json", "--codegree-bounds", pol) == 0
    reduced = load_instance(tmp_path / "r.json")
    assert not codegree_violations(reduced, lambda s, l: 1.5 ** (l - s))


def test_threads_env_default(monkeypatch):
    from hypernibble.cli import build_parser
    monkeypatch.setenv("NIBBLE_THREADS", "4")
    args = build_parser().parse_args(["color", "--instance", "x", "--out", "y"])
    assert args.threads == 4


def test_help_lists_every_command(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for cmd in ("generate", "reduce", "color", "verify", "stats"):
        assert cmd in out
