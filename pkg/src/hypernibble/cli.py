"""Command line: generate, reduce, color, verify, stats.

Exit codes: 0 ok, 1 verification found violations, 2 input error,
3 algorithmic failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import io
from .coloring import uniform_lists
from .completion import CompletionConfig, CompletionError, CompletionStats, complete
from .instances import gen_linear, gen_uniform, make_triangle_free, random_lists
from .nibble import (init_state, initial_delta, read_trace_csv, run_to_termination,
                     summarize_rounds, write_globals_json, write_trace_csv)
from .params import Params, degree_scale
from .reduction import balanced_reduce, f_reduce
from .verify import codegree_violations, verify_list, verify_proper

log = logging.getLogger("hypernibble")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_FAILURE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(obj, out) -> None:
    if out:
        io.dump_json(obj, out)
    else:
        json.dump(obj, sys.stdout, indent=1, sort_keys=True)
        sys.stdout.write("\n")


def cmd_generate(args) -> int:
    if args.linear:
        h = gen_linear(args.n, args.k, args.m, args.seed)
        if len(h) < args.m:
            raise InputError(f"linear packing reached only {len(h)} of {args.m} edges")
    else:
        h = gen_uniform(args.n, args.k, args.m, args.seed)
    if args.triangle_free:
        h = make_triangle_free(h, args.seed)
    io.save_instance(h, args.out)
    if args.lists_size:
        pool = args.pool or 2 * args.lists_size
        lists_out = args.lists_out or Path(args.out).with_suffix(".lists.json")
        io.save_lists(random_lists(args.n, args.lists_size, pool, args.seed), lists_out)
    log.info("wrote %s (%d edges)", args.out, len(h))
    return EXIT_OK


def cmd_reduce(args) -> int:
    h = io.load_instance(args.instance, args.allow_dup)
    if args.balanced:
        res = balanced_reduce(h, full_output=True)
        out_h, trace = res.hypergraph, res.trace.to_json()
        trace["delta"] = res.delta
        trace["lambdas"] = {str(l): v for l, v in sorted(res.lambdas.items())}
        # same shape as a policy file, so the trace can feed verify --codegree-bounds
        k = h.rank
        trace["thresholds"] = [[s, l, res.threshold(s, l)]
                               for l in range(3, k + 1) for s in range(2, l)]
    else:
        policy = io.load_policy(args.policy)
        rt = f_reduce(h, policy, mode=args.mode)
        out_h, trace = rt.final, rt.to_json()
    io.save_instance(out_h, args.out)
    if args.trace_out:
        io.dump_json(trace, args.trace_out)
    return EXIT_OK


def _params(args, h, lists) -> Params:
    k = args.k or h.rank
    if args.relax:
        C = args.colors or min((len(set(l)) for l in lists.values()), default=1)
        delta = args.delta or initial_delta(h, lists, k, args.phi1, C)
        return Params.relaxed(k, delta, args.phi1, args.phi2, C, args.epsilon)
    delta = args.delta or degree_scale(h.degree_profile(), k)
    return Params.asymptotic(k, delta)


def cmd_color(args) -> int:
    h = io.load_instance(args.instance, args.allow_dup)
    if args.lists:
        lists = io.load_lists(args.lists)
    elif args.colors:
        lists = uniform_lists(h.num_vertices, [f"c{j}" for j in range(args.colors)])
    else:
        raise InputError("need --lists or --colors")
    params = _params(args, h, lists)
    state = init_state(h, lists, params, seed=args.seed, q_method=args.q_method,
                       mc_samples=args.mc_samples, deterministic_tiebreak=args.deterministic_tiebreak,
                       threads=args.threads)
    state, traces = run_to_termination(state, args.max_rounds)
    log.info("nibble stopped after round %d (%s); %d uncolored, %d deferred",
             state.round, state.status, len(state.uncolored), len(state.deferred))
    if args.trace:
        write_trace_csv(traces, args.trace, h.num_vertices)
        write_globals_json(traces, args.globals or Path(args.trace).with_suffix(".globals.json"))
    if args.state_out:
        io.dump_json(state.to_json(), args.state_out)
    stats = CompletionStats()
    try:
        coloring = complete(state, CompletionConfig(args.max_resamples, args.fallback), stats)
    except CompletionError as exc:
        _emit({"error": str(exc), "vertices": exc.vertices,
               "deferred": sorted(state.deferred)}, None)
        return EXIT_FAILURE
    io.save_coloring(coloring, args.out)
    rep = verify_list(h, lists, coloring)
    log.info("completion: %d resamples, %d greedy; verify ok=%s", stats.resamples, stats.greedy, rep.ok)
    if not rep.ok:
        _emit(rep.to_json(), None)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_verify(args) -> int:
    h = io.load_instance(args.instance, args.allow_dup)
    report: dict = {}
    ok = True
    if args.coloring:
        coloring = io.load_coloring(args.coloring)
        if args.lists:
            rep = verify_list(h, io.load_lists(args.lists), coloring)
        else:
            rep = verify_proper(h, coloring)
        report["coloring"] = rep.to_json()
        ok &= rep.ok
    if args.triangle_free:
        wit = h.find_triangle()
        report["triangle"] = None if wit is None else {
            "edges": [list(e) for e in wit.edges], "vertices": list(wit.vertices)}
        ok &= wit is None
    if args.codegree_bounds:
        policy = io.load_policy(args.codegree_bounds)
        bad = codegree_violations(h, policy)
        report["codegree_violations"] = [[list(S), l, n] for S, l, n in bad]
        ok &= not bad
    if not report:
        raise InputError("nothing to verify: pass --coloring, --triangle-free or --codegree-bounds")
    report["ok"] = ok
    _emit(report, args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_stats(args) -> int:
    rows = read_trace_csv(args.trace)
    globals_ = io.load_json(args.globals) if args.globals else None
    _emit(summarize_rounds(rows, globals_), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    p = argparse.ArgumentParser(prog="hypernibble", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write a random instance (and lists)")
    g.add_argument("--n", type=int, required=True, help="number of vertices")
    g.add_argument("--k", type=int, required=True, help="edge size")
    g.add_argument("--m", type=int, required=True, help="number of edges")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--triangle-free", action="store_true", help="delete edges until triangle-free")
    g.add_argument("--linear", action="store_true", help="pairwise intersections of size <= 1")
    g.add_argument("--lists-size", type=int, default=0, help="also write random lists of this size")
    g.add_argument("--pool", type=int, default=0, help="color pool for lists (default 2 x lists-size)")
    g.add_argument("--lists-out", help="lists file (default <out>.lists.json)")
    g.add_argument("--out", required=True, help="instance JSON")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("reduce", parents=[common], help="codegree reduction")
    r.add_argument("--instance", required=True)
    mode = r.add_mutually_exclusive_group(required=True)
    mode.add_argument("--policy", help="policy JSON: {'base': b} or {'thresholds': [[s, l, f], ...]}")
    mode.add_argument("--balanced", action="store_true", help="adaptive Lambda-balanced thresholds")
    r.add_argument("--mode", choices=["snapshot", "sequential"], default="snapshot",
                   help="contract all qualifying sets at once, or one at a time against the live edges")
    r.add_argument("--out", required=True, help="reduced instance JSON")
    r.add_argument("--trace-out", help="reduction trace JSON")
    r.add_argument("--allow-dup", action="store_true", help="merge duplicate edges")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("color", parents=[common], help="nibble + completion")
    c.add_argument("--instance", required=True)
    c.add_argument("--lists", help="lists JSON (default: --colors shared colors)")
    c.add_argument("--colors", type=int, help="palette size C (and shared list size without --lists)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--k", type=int, help="rank (default: instance rank)")
    c.add_argument("--relax", action="store_true", help="user constants instead of the asymptotic ones")
    c.add_argument("--phi1", type=float, default=0.1, help="relaxed phi1")
    c.add_argument("--phi2", type=float, default=0.09, help="relaxed phi2")
    c.add_argument("--delta", type=float, help="degree scale (default: derived from the instance)")
    c.add_argument("--epsilon", type=float, help="relaxed error parameter (default 0.1)")
    c.add_argument("--max-rounds", type=int)
    c.add_argument("--deterministic-tiebreak", action="store_true",
                   help="color with the smallest candidate instead of a random one")
    c.add_argument("--q-method", choices=["exact", "monte_carlo"], default="exact")
    c.add_argument("--mc-samples", type=int, default=10_000)
    c.add_argument("--threads", type=int, default=int(os.environ.get("NIBBLE_THREADS", "1")),
                   help="threads for the per-vertex sampling phase (env NIBBLE_THREADS)")
    c.add_argument("--max-resamples", type=int, default=100_000)
    c.add_argument("--fallback", choices=["greedy", "fail"], default="greedy")
    c.add_argument("--trace", help="per-(round, vertex) CSV")
    c.add_argument("--globals", help="per-round globals JSON (default <trace>.globals.json)")
    c.add_argument("--state-out", help="final nibble state JSON")
    c.add_argument("--out", required=True, help="coloring JSON")
    c.add_argument("--allow-dup", action="store_true")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", parents=[common], help="check a coloring / triangle-freeness / codegree bounds")
    v.add_argument("--instance", required=True)
    v.add_argument("--coloring")
    v.add_argument("--lists")
    v.add_argument("--triangle-free", action="store_true")
    v.add_argument("--codegree-bounds", help="policy JSON giving f(s, l)")
    v.add_argument("--out", help="report JSON (default stdout)")
    v.add_argument("--allow-dup", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", parents=[common], help="per-round aggregates of a trace CSV")
    s.add_argument("--trace", required=True)
    s.add_argument("--globals")
    s.add_argument("--out")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
