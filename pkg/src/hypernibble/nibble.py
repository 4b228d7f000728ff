"""Semi-random list coloring of rank-k hypergraphs.

Each round activates colors at random, drops colors that are lost to fully
activated constraint edges, keeps each surviving color with probability
``beta / q`` so that it stays with probability exactly ``beta``, colors the
vertices holding an activated kept color, and rewrites the per-color
constraint hypergraphs: edges touched by a newly colored vertex shrink to the
uncolored remainder.  Palettes are then filtered by weighted c-degree and each
color's constraint hypergraph goes through codegree reduction.
"""
from __future__ import annotations

import csv
import json
import logging
import math
import warnings
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Mapping, Optional

import numpy as np

from . import _rng
from .coloring import Coloring, color_sort_key
from .hypercore import Edge, Hypergraph, as_edge
from .params import Params
from .reduction import reduce_edges

log = logging.getLogger(__name__)

EXACT_Q_LIMIT = 20


class ConstraintFamily:
    """Per-color constraint edges: no edge of color ``c`` may end up with all
    of its vertices colored ``c``."""

    def __init__(self, k: int, by_color: Optional[Mapping[int, Iterable[Edge]]] = None):
        self.k = k
        self._by_color: dict[int, set[Edge]] = {}
        for c, edges in (by_color or {}).items():
            edges = {as_edge(e) for e in edges}
            if edges:
                self._by_color[c] = edges

    def __len__(self) -> int:
        return sum(len(s) for s in self._by_color.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, ConstraintFamily) and self._by_color == other._by_color

    def colors(self) -> list[int]:
        return sorted(self._by_color)

    def edges(self, c: int, size: Optional[int] = None) -> list[Edge]:
        es = self._by_color.get(c, ())
        if size is not None:
            es = [e for e in es if len(e) == size]
        return sorted(es)

    def edge_set(self, c: int) -> frozenset[Edge]:
        return frozenset(self._by_color.get(c, ()))

    def items(self):
        """``(color, edge)`` pairs in sorted order."""
        for c in self.colors():
            for e in sorted(self._by_color[c]):
                yield c, e

    def incidence(self) -> dict[tuple[int, int], list[Edge]]:
        inc: dict[tuple[int, int], list[Edge]] = defaultdict(list)
        for c, edges in self._by_color.items():
            for e in edges:
                for u in e:
                    inc[(u, c)].append(e)
        return inc

    def cdegrees(self, weight_base: float) -> dict[tuple[int, int], float]:
        """``sum_l weight_base**(k-l) * d_l(u, c)`` for every incident ``(u, c)``."""
        w = [weight_base ** (self.k - l) for l in range(self.k + 1)]
        out: dict[tuple[int, int], float] = defaultdict(float)
        for c, edges in self._by_color.items():
            for e in edges:
                x = w[len(e)]
                for u in e:
                    out[(u, c)] += x
        return out

    def hypergraph(self, c: int, num_vertices: int) -> Hypergraph:
        return Hypergraph(num_vertices, self._by_color.get(c, ()), self.k)

    def to_json(self) -> dict:
        return {str(c): [list(e) for e in self.edges(c)] for c in self.colors()}

    @classmethod
    def from_json(cls, k: int, d: Mapping) -> "ConstraintFamily":
        return cls(k, {int(c): [tuple(e) for e in es] for c, es in d.items()})


def prune_subsumed(edges: set[Edge]) -> set[Edge]:
    """Drop every edge that strictly contains another edge of the set."""
    if not edges:
        return edges
    smallest = min(len(e) for e in edges)
    return {e for e in edges
            if not any(sub in edges for s in range(smallest, len(e)) for sub in combinations(e, s))}


@dataclass
class NibbleState:
    hypergraph: Hypergraph
    params: Params
    colors: tuple                      # color id -> label
    lists: dict[int, tuple[int, ...]]  # original lists as color ids
    round: int
    uncolored: frozenset[int]
    palettes: dict[int, frozenset[int]]
    constraints: ConstraintFamily
    colored: dict[int, tuple[int, int]] = field(default_factory=dict)  # v -> (color, round)
    deferred: frozenset[int] = frozenset()
    seed: int = 0
    q_method: str = "exact"
    mc_samples: int = 10_000
    deterministic_tiebreak: bool = False
    threads: int = 1
    status: str = "running"

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def weight_base(self) -> float:
        return self.params.weight_base(self.round)

    def cdegrees(self) -> dict[tuple[int, int], float]:
        return self.constraints.cdegrees(self.weight_base())

    def partial_coloring(self) -> Coloring:
        return Coloring({v: self.colors[c] for v, (c, _) in sorted(self.colored.items())},
                        {v: f"nibble:{r}" for v, (_, r) in sorted(self.colored.items())})

    def to_json(self) -> dict:
        h = self.hypergraph
        return {
            "instance": {"num_vertices": h.num_vertices, "rank": h.rank,
                         "edges": [list(e) for e in h.edges]},
            "params": self.params.to_json(),
            "colors": [str(c) for c in self.colors],
            "lists": {str(v): list(l) for v, l in sorted(self.lists.items())},
            "round": self.round,
            "uncolored": sorted(self.uncolored),
            "palettes": {str(v): sorted(p) for v, p in sorted(self.palettes.items())},
            "constraints": self.constraints.to_json(),
            "colored": {str(v): list(cr) for v, cr in sorted(self.colored.items())},
            "deferred": sorted(self.deferred),
            "seed": self.seed,
            "q_method": self.q_method,
            "mc_samples": self.mc_samples,
            "deterministic_tiebreak": self.deterministic_tiebreak,
            "status": self.status,
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "NibbleState":
        inst = d["instance"]
        params = Params.from_json(d["params"])
        return cls(
            hypergraph=Hypergraph(inst["num_vertices"], inst["edges"], inst["rank"]),
            params=params,
            colors=tuple(d["colors"]),
            lists={int(v): tuple(l) for v, l in d["lists"].items()},
            round=int(d["round"]),
            uncolored=frozenset(d["uncolored"]),
            palettes={int(v): frozenset(p) for v, p in d["palettes"].items()},
            constraints=ConstraintFamily.from_json(params.k, d["constraints"]),
            colored={int(v): (int(c), int(r)) for v, (c, r) in d["colored"].items()},
            deferred=frozenset(d["deferred"]),
            seed=int(d["seed"]),
            q_method=d.get("q_method", "exact"),
            mc_samples=int(d.get("mc_samples", 10_000)),
            deterministic_tiebreak=bool(d.get("deterministic_tiebreak", False)),
            status=d.get("status", "running"),
        )


@dataclass
class RoundTrace:
    """Per-round record: palette sizes and average c-degrees per uncolored
    vertex plus the scheduled quantities.

    ``cdeg`` holds ``d_i(u, c)`` for retained colors; ``temp_cdeg`` holds the
    pre-reduction ``d^_i(u, c)`` for the same pairs (absent at round 0).
    """

    round: int
    palette_size: dict[int, int]
    Lambda: dict[int, float]
    lam: dict[int, float]
    D: dict[int, float]
    p: float
    p_approx: float
    t: float
    t_approx: float
    zeta: float
    colored: int
    deferred: int
    cdeg: dict[tuple[int, int], float] = field(default_factory=dict, repr=False)
    temp_cdeg: Optional[dict[tuple[int, int], float]] = field(default=None, repr=False)
    epsilon: float = 0.0

    def globals_json(self) -> dict:
        return {"round": self.round, "p": self.p, "p_approx": self.p_approx, "t": self.t,
                "t_approx": self.t_approx, "zeta": self.zeta, "colored": self.colored,
                "deferred": self.deferred, "epsilon": self.epsilon}


def record_trace(state: NibbleState, colored: int = 0,
                 temp_cdeg: Optional[dict] = None) -> RoundTrace:
    params, i = state.params, state.round
    cdeg_all = state.cdegrees()
    p_apx, t = params.p_approx(i), params.t(i)
    sizes, Lam, lam, D = {}, {}, {}, {}
    cdeg = {}
    for u in sorted(state.uncolored | state.deferred):
        pal = state.palettes.get(u, frozenset())
        sizes[u] = len(pal)
        vals = [cdeg_all.get((u, c), 0.0) for c in sorted(pal)]
        for c, x in zip(sorted(pal), vals):
            cdeg[(u, c)] = x
        Lam[u] = sum(vals) / len(vals) if vals else 0.0
        lam[u] = min(1.0, len(pal) / p_apx)
        D[u] = lam[u] * Lam[u] + (1 - lam[u]) * 2 * t
    return RoundTrace(i, sizes, Lam, lam, D, params.p(i), p_apx, t, params.t_approx(i),
                      params.zeta(i), colored, len(state.deferred), cdeg, temp_cdeg,
                      params.epsilon)


# -- initial state ----------------------------------------------------------------

def init_state(h: Hypergraph, lists: Mapping[int, Iterable], params: Params, *,
               seed: int = 0, q_method: str = "exact", mc_samples: int = 10_000,
               deterministic_tiebreak: bool = False, threads: int = 1) -> NibbleState:
    """Round-0 state: every vertex uncolored with palette ``lists[v]`` and one
    constraint edge of color ``c`` for each edge whose vertices all list ``c``.

    Lists longer than ``C`` keep their ``C`` smallest colors.  Without relaxed
    mode a list shorter than ``C`` or a c-degree above ``2 t_0`` is an error;
    in relaxed mode such colors are dropped instead.
    """
    if h.rank > params.k:
        raise ValueError(f"hypergraph rank {h.rank} exceeds k={params.k}")
    if q_method not in ("exact", "monte_carlo"):
        raise ValueError(f"unknown q method {q_method!r}")
    labels = sorted({c for v in range(h.num_vertices) for c in lists.get(v, ())}, key=color_sort_key)
    cid = {c: i for i, c in enumerate(labels)}
    ids: dict[int, tuple[int, ...]] = {}
    palettes: dict[int, frozenset[int]] = {}
    for v in range(h.num_vertices):
        L = tuple(sorted({cid[c] for c in lists.get(v, ())}))
        if len(L) < params.C and not params.relax_mode:
            raise ValueError(f"vertex {v} has {len(L)} colors, needs at least C={params.C}")
        ids[v] = L
        palettes[v] = frozenset(L[:params.C])

    def build(pals):
        fam: dict[int, set[Edge]] = defaultdict(set)
        for e in h.edges:
            for c in frozenset.intersection(*(pals[v] for v in e)):
                fam[c].add(e)
        return ConstraintFamily(params.k, fam)

    constraints = build(palettes)
    limit = 2 * params.t(0)
    cdeg = constraints.cdegrees(params.weight_base(0))
    over = {(u, c) for (u, c), x in cdeg.items() if x > limit}
    if over:
        if not params.relax_mode:
            u, c = min(over)
            raise ValueError(f"c-degree {cdeg[(u, c)]:.3g} of vertex {u}, color {labels[c]} exceeds 2 t_0 = {limit:.3g}")
        log.info("dropping %d (vertex, color) pairs over 2 t_0", len(over))
        for u, c in over:
            palettes[u] = palettes[u] - {c}
        constraints = build(palettes)
    deferred = frozenset(v for v, p in palettes.items() if not p)
    return NibbleState(h, params, tuple(labels), ids, 0,
                       frozenset(range(h.num_vertices)) - deferred,
                       {v: p for v, p in palettes.items() if v not in deferred},
                       constraints, {}, deferred, seed, q_method, mc_samples,
                       deterministic_tiebreak, threads)


def initial_delta(h: Hypergraph, lists: Mapping[int, Iterable], k: int, phi1: float, C: int) -> float:
    """``max d_0(u, c) / (k - 1)`` for the given lists truncated to ``C`` colors,
    i.e. the smallest ``delta`` with ``d_0(u, c) <= t_0``.  At least 1."""
    labels = sorted({c for v in range(h.num_vertices) for c in lists.get(v, ())}, key=color_sort_key)
    cid = {c: i for i, c in enumerate(labels)}
    pals = {v: frozenset(sorted(cid[c] for c in set(lists.get(v, ())))[:C]) for v in range(h.num_vertices)}
    fam: dict[int, set[Edge]] = defaultdict(set)
    for e in h.edges:
        for c in frozenset.intersection(*(pals[v] for v in e)):
            fam[c].add(e)
    cdeg = ConstraintFamily(k, fam).cdegrees(phi1 * C)
    return max([1.0] + [x / (k - 1) for x in cdeg.values()])


def weighted_cdegree(state: NibbleState, u: int, c: int) -> float:
    """``sum_l (phi1 p_i)**(k-l) d_l(u, c)`` over the current constraint edges."""
    w = state.weight_base()
    return sum(w ** (state.k - len(e)) for e in state.constraints.edge_set(c) if u in e)


# -- keep probability q ---------------------------------------------------------

def _components(sets: list[frozenset]) -> list[list[frozenset]]:
    groups: list[tuple[set, list]] = []
    for s in sets:
        hit = [g for g in groups if g[0] & s]
        verts, members = set(s), [s]
        for g in hit:
            verts |= g[0]
            members += g[1]
            groups.remove(g)
        groups.append((verts, members))
    return [m for _, m in groups]


def q_exact(residuals: Iterable[Iterable[int]], pi: float) -> float:
    """Probability that no residual set is fully activated, each vertex
    activated independently with probability ``pi``.

    Inclusion-exclusion, factored over vertex-disjoint groups of residuals.
    """
    sets = list({frozenset(r) for r in residuals})
    if not sets:
        return 1.0
    if any(not s for s in sets):
        return 0.0
    q = 1.0
    for comp in _components(sets):
        if len(comp) == 1:
            q *= 1.0 - pi ** len(comp[0])
            continue
        idx = {v: j for j, v in enumerate(sorted(set().union(*comp)))}
        masks = [sum(1 << idx[v] for v in s) for s in comp]
        total = 0.0
        # subsets J of comp: (-1)^|J| pi^|union J|
        unions = [0]
        signs = [1]
        for m in masks:
            unions += [u | m for u in unions]
            signs += [-s for s in signs]
        for u, s in zip(unions, signs):
            total += s * pi ** bin(u).count("1")
        q *= total
    return min(1.0, max(0.0, q))


def q_monte_carlo(residuals: Iterable[Iterable[int]], pi: float, n: int,
                  rng: np.random.Generator) -> float:
    """Empirical frequency, over ``n`` activation samples, of no residual set
    being fully activated."""
    sets = [tuple(r) for r in residuals]
    if not sets:
        return 1.0
    verts = sorted(set().union(*sets))
    col = {v: j for j, v in enumerate(verts)}
    active = rng.random((n, len(verts))) < pi
    hit = np.zeros(n, dtype=bool)
    for s in sets:
        hit |= active[:, [col[v] for v in s]].all(axis=1)
    return float(1.0 - hit.mean())


def estimate_q(state: NibbleState, u: int, c: int, method: str = "exact",
               n: int = 10_000, rng: Optional[np.random.Generator] = None) -> float:
    """Probability that color ``c`` is not lost at ``u`` in the next round.

    ``method="exact"`` refuses (``ValueError``) above 20 incident constraint
    edges; ``"monte_carlo"`` samples ``n`` activation patterns.
    """
    i = state.round + 1
    pi = state.params.pi(i)
    residuals = [tuple(v for v in e if v != u) for e in state.constraints.edge_set(c) if u in e]
    if method == "exact":
        if len(residuals) > EXACT_Q_LIMIT:
            raise ValueError(f"{len(residuals)} incident edges exceed the exact limit {EXACT_Q_LIMIT}")
        return q_exact(residuals, pi)
    if method == "monte_carlo":
        if rng is None:
            rng = _rng.stream(state.seed, i, _rng.Q_MONTE_CARLO, u, c)
        return q_monte_carlo(residuals, pi, n, rng)
    raise ValueError(f"unknown q method {method!r}")


# -- one round ------------------------------------------------------------------

@dataclass
class RoundSample:
    """Outcome of activation, loss and selection for round ``i``."""

    round: int
    pi: float
    activated: dict[int, set[int]]
    lost: dict[int, set[int]]
    q: dict[tuple[int, int], float]
    selected: dict[int, set[int]]
    temp: dict[int, set[int]]


def sample_round(state: NibbleState) -> RoundSample:
    i = state.round + 1
    params = state.params
    pi, beta = params.pi(i), params.beta
    U = sorted(state.uncolored)
    n, K = state.hypergraph.num_vertices, max(1, state.num_colors)
    act_draw = _rng.stream(state.seed, i, _rng.ACTIVATE).random((n, K))
    sel_draw = _rng.stream(state.seed, i, _rng.SELECT).random((n, K))

    activated = {u: {c for c in state.palettes[u] if act_draw[u, c] < pi} for u in U}
    inc = state.constraints.incidence()

    lost: dict[int, set[int]] = {u: set() for u in U}
    for c, e in state.constraints.items():
        on = [c in activated[v] for v in e]
        n_on = sum(on)
        if n_on < len(e) - 1:
            continue
        for v, a in zip(e, on):
            if n_on - a == len(e) - 1:
                lost[v].add(c)

    def q_for(u):
        out = {}
        for c in state.palettes[u]:
            es = inc.get((u, c))
            if not es:
                out[(u, c)] = 1.0
                continue
            residuals = [tuple(v for v in e if v != u) for e in es]
            if state.q_method == "exact" and len(residuals) <= EXACT_Q_LIMIT:
                out[(u, c)] = q_exact(residuals, pi)
            else:
                rng = _rng.stream(state.seed, i, _rng.Q_MONTE_CARLO, u, c)
                out[(u, c)] = q_monte_carlo(residuals, pi, state.mc_samples, rng)
        return out

    q: dict[tuple[int, int], float] = {}
    if state.threads > 1 and len(U) > 1:
        with ThreadPoolExecutor(state.threads) as pool:
            for part in pool.map(q_for, U):
                q.update(part)
    else:
        for u in U:
            q.update(q_for(u))

    selected = {}
    for u in U:
        selected[u] = {c for c in state.palettes[u]
                       if q[(u, c)] > 0 and sel_draw[u, c] < min(1.0, beta / q[(u, c)])}
    temp = {u: selected[u] - lost[u] for u in U}
    return RoundSample(i, pi, activated, lost, q, selected, temp)


def run_round(state: NibbleState) -> tuple[NibbleState, RoundTrace]:
    """Execute one round; returns the new state and its trace."""
    if not state.uncolored:
        done = replace(state, status="all_colored")
        return done, record_trace(done)
    params, k = state.params, state.k
    i = state.round + 1
    if i > params.T:
        raise ValueError(f"round {i} is past the termination round T={params.T}")
    if not params.runnable(i):
        raise ValueError(f"schedule for round {i} is unusable (t_i={params.t(i):.3g}, "
                         f"phi1 p_i={params.weight_base(i):.3g}, pi_i={params.pi(i):.3g})")
    smp = sample_round(state)

    # permanent coloring
    tie = _rng.stream(state.seed, i, _rng.TIEBREAK).random(state.hypergraph.num_vertices)
    newly: dict[int, int] = {}
    for u in sorted(state.uncolored):
        cands = sorted(smp.activated[u] & smp.temp[u])
        if cands:
            newly[u] = cands[0] if state.deterministic_tiebreak else cands[int(tie[u] * len(cands))]
    U_i = state.uncolored - newly.keys()

    # temporary constraint hypergraphs
    temp_edges: dict[int, set[Edge]] = defaultdict(set)
    for c, e in state.constraints.items():
        got = [newly.get(v) for v in e]
        if any(x is not None and x != c for x in got):
            continue
        rest = tuple(v for v, x in zip(e, got) if x is None)
        if not all(c in smp.temp[v] for v in rest):
            continue
        # a constraint edge can never be fully colored by its own color
        assert len(rest) >= 2, (c, e, rest)
        temp_edges[c].add(rest)
    temp_family = ConstraintFamily(k, temp_edges)

    # filter palettes by temporary c-degree
    w = params.weight_base(i)
    two_t, cap = 2 * params.t(i), math.floor(params.p(i) + 1e-9)
    d_hat = temp_family.cdegrees(w)
    palettes: dict[int, frozenset[int]] = {}
    temp_cdeg: dict[tuple[int, int], float] = {}
    for u in sorted(U_i):
        ok = sorted((d_hat.get((u, c), 0.0), c) for c in smp.temp[u]
                    if d_hat.get((u, c), 0.0) <= two_t)
        palettes[u] = frozenset(c for _, c in ok[:cap])
        for x, c in ok[:cap]:
            temp_cdeg[(u, c)] = x
    deferred_now = frozenset(u for u in U_i if not palettes[u])
    if deferred_now:
        log.info("round %d: %d vertices lost every color; deferred", i, len(deferred_now))

    # per-color codegree reduction and subsumption pruning
    f = lambda s, l: w ** (l - s)  # noqa: E731
    new_edges: dict[int, set[Edge]] = {}
    for c in temp_family.colors():
        keep = {e for e in temp_family.edge_set(c) if all(c in palettes[v] for v in e)}
        if not keep:
            continue
        # sequential contractions keep the weighted c-degree from growing
        reduced, _ = reduce_edges(keep, k, f, mode="sequential")
        reduced = prune_subsumed(reduced)
        if reduced:
            new_edges[c] = reduced

    colored = dict(state.colored)
    colored.update({u: (c, i) for u, c in newly.items()})
    new_state = replace(
        state,
        round=i,
        uncolored=U_i - deferred_now,
        palettes={u: p for u, p in palettes.items() if u not in deferred_now},
        constraints=ConstraintFamily(k, new_edges),
        colored=colored,
        deferred=state.deferred | deferred_now,
        status="running",
    )
    return new_state, record_trace(new_state, len(newly), temp_cdeg)


def run_to_termination(state: NibbleState, max_rounds: Optional[int] = None
                       ) -> tuple[NibbleState, list[RoundTrace]]:
    """Run rounds until ``zeta_i <= 1/(8k)``.

    Returns the final state and the traces, the first of which describes the
    starting state.  ``state.status`` is ``"terminated"``, ``"all_colored"``,
    ``"max_rounds"`` or ``"schedule_exhausted"`` (the next scheduled round
    has ``t_i <= 0``, ``phi1 p_i <= 1`` or ``pi_i > 1``).
    """
    params = state.params
    traces = [record_trace(state)]
    start = state.round
    while True:
        i = state.round + 1
        if i > params.T:
            state = replace(state, status="terminated")
            break
        if not state.uncolored:
            state = replace(state, status="all_colored")
            break
        if max_rounds is not None and state.round - start >= max_rounds:
            warnings.warn(f"stopped after {max_rounds} rounds before zeta reached 1/(8k)", RuntimeWarning)
            state = replace(state, status="max_rounds")
            break
        if not params.runnable(i):
            log.warning("round %d schedule unusable; handing over to completion", i)
            state = replace(state, status="schedule_exhausted")
            break
        prev_zeta = params.zeta(state.round)
        state, trace = run_round(state)
        expect = prev_zeta - params.zeta_step
        if not math.isclose(trace.zeta, expect, rel_tol=1e-9, abs_tol=1e-9 * params.zeta(0)):
            raise RuntimeError(f"zeta recurrence broken at round {i}: {trace.zeta} vs {expect}")
        traces.append(trace)
    return state, traces


# -- trajectory -----------------------------------------------------------------

def trajectory_check(traces: list[RoundTrace], params: Params) -> list[dict]:
    """Per round, the fraction of uncolored vertices with ``D_i(u) <= t'_i``
    and with ``|P_i(u)| >= (1 - (1+eps)**i / 2) p'_i``."""
    if not traces:
        raise ValueError("no traces")
    report = []
    for tr in traces:
        i = tr.round
        verts = sorted(tr.D)
        floor_p = (1 - (1 + params.epsilon) ** i / 2) * params.p_approx(i)
        n = len(verts)
        d_ok = sum(1 for u in verts if tr.D[u] <= params.t_approx(i))
        p_ok = sum(1 for u in verts if tr.palette_size[u] >= floor_p)
        report.append({"round": i, "vertices": n,
                       "frac_D_ok": d_ok / n if n else 1.0,
                       "frac_palette_ok": p_ok / n if n else 1.0})
    return report


def write_trace_csv(traces: list[RoundTrace], path, num_vertices: int) -> None:
    """One row per (round, vertex); colored vertices have empty trajectory cells."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["round", "vertex", "palette_size", "lambda", "Lambda", "D"])
        for tr in traces:
            for v in range(num_vertices):
                if v in tr.D:
                    w.writerow([tr.round, v, tr.palette_size[v], repr(tr.lam[v]),
                                repr(tr.Lambda[v]), repr(tr.D[v])])
                else:
                    w.writerow([tr.round, v, 0, "", "", ""])


def write_globals_json(traces: list[RoundTrace], path) -> None:
    with open(path, "w") as fh:
        json.dump([tr.globals_json() for tr in traces], fh, indent=1)
        fh.write("\n")


def read_trace_csv(path) -> dict[int, list[dict]]:
    """Rows of uncolored vertices grouped by round, as written by :func:`write_trace_csv`."""
    out: dict[int, list[dict]] = defaultdict(list)
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            i = int(row["round"])
            out.setdefault(i, [])
            if row["D"] == "":
                continue
            out[i].append({"vertex": int(row["vertex"]), "palette_size": int(row["palette_size"]),
                           "lambda": float(row["lambda"]), "Lambda": float(row["Lambda"]),
                           "D": float(row["D"])})
    return dict(out)


def summarize_rounds(rows: Mapping[int, list[dict]], globals_: Optional[list[dict]] = None) -> list[dict]:
    """Per-round aggregates of a trace: mean/max ``D``, palette-size quantiles
    and, given the globals, ``zeta`` and the trajectory fractions."""
    g = {int(x["round"]): x for x in (globals_ or [])}
    out = []
    for i in sorted(rows):
        rs = rows[i]
        agg: dict = {"round": i, "vertices": len(rs)}
        if rs:
            D = np.array([r["D"] for r in rs])
            P = np.array([r["palette_size"] for r in rs], dtype=float)
            agg.update(mean_D=float(D.mean()), max_D=float(D.max()),
                       mean_Lambda=float(np.mean([r["Lambda"] for r in rs])),
                       palette_quantiles=[float(x) for x in np.quantile(P, [0, 0.25, 0.5, 0.75, 1])])
        if i in g:
            gi = g[i]
            agg["zeta"] = gi["zeta"]
            if rs:
                floor_p = (1 - (1 + gi["epsilon"]) ** i / 2) * gi["p_approx"]
                agg["frac_D_ok"] = sum(r["D"] <= gi["t_approx"] for r in rs) / len(rs)
                agg["frac_palette_ok"] = sum(r["palette_size"] >= floor_p for r in rs) / len(rs)
        out.append(agg)
    return out
