"""Codegree reduction.

Sets of vertices with too many superedges are contracted into a single
smaller edge, largest set size first.  A proper coloring of the reduced
hypergraph is proper for the original, and triangle-freeness is preserved
whenever the threshold function ``f`` has ``f(l, l) = 1`` and is strictly
decreasing in ``s``.
"""
from __future__ import annotations

import logging
import math
import warnings
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Union

from .hypercore import Edge, Hypergraph

log = logging.getLogger(__name__)

Threshold = Callable[[int, int], float]


class ReductionPolicy:
    """Threshold function ``f(s, l)`` for the codegree reduction.

    ``f`` may be a callable or a mapping ``{(s, l): value}``; for a mapping
    the diagonal ``f(l, l) = 1`` is implied.
    """

    def __init__(self, f: Union[Threshold, Mapping[tuple[int, int], float]]):
        if callable(f):
            self._f = f
            self.table = None
        else:
            self.table = {(int(s), int(l)): float(v) for (s, l), v in f.items()}
            self._f = self._lookup

    def _lookup(self, s: int, l: int) -> float:
        if s == l:
            return self.table.get((s, l), 1.0)
        try:
            return self.table[(s, l)]
        except KeyError:
            raise ValueError(f"policy table has no entry for (s={s}, l={l})") from None

    @classmethod
    def geometric(cls, base: float) -> "ReductionPolicy":
        """``f(s, l) = base ** (l - s)``."""
        return cls(lambda s, l: base ** (l - s))

    def __call__(self, s: int, l: int) -> float:
        return self._f(s, l)

    def validate(self, k: int) -> None:
        """Raise ``ValueError`` unless ``f(l, l) = 1`` and ``f`` strictly
        decreases in ``s`` for every ``2 <= s <= l <= k``."""
        for l in range(2, k + 1):
            if self(l, l) != 1:
                raise ValueError(f"f({l}, {l}) = {self(l, l)}, must be 1")
            for s1 in range(3, l + 1):
                for s2 in range(2, s1):
                    if not self(s1, l) < self(s2, l):
                        raise ValueError(
                            f"f({s1}, {l}) = {self(s1, l)} is not below f({s2}, {l}) = {self(s2, l)}")


@dataclass
class Contraction:
    vertices: Edge
    size: int        # size l of the superedges removed
    removed: int     # deg_l(S) in the hypergraph the round started from

    def to_json(self) -> dict:
        return {"set": list(self.vertices), "size": self.size, "removed": self.removed}


@dataclass
class ReductionRound:
    index: int
    target_size: int
    contractions: list[Contraction] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"round": self.index, "target_size": self.target_size,
                "contractions": [c.to_json() for c in self.contractions]}


@dataclass
class ReductionTrace:
    rounds: list[ReductionRound]
    final: Hypergraph

    @property
    def contracted(self) -> list[Contraction]:
        return [c for r in self.rounds for c in r.contractions]

    def to_json(self) -> dict:
        return {"rounds": [r.to_json() for r in self.rounds],
                "final_edges": [list(e) for e in self.final.edges]}


def reduction_round(edges: set[Edge], s: int, k: int, threshold: Callable[[int], float],
                    mode: str = "snapshot") -> tuple[set[Edge], list[Contraction]]:
    """One contraction round for target size ``s``.

    ``threshold(l)`` is the codegree cut for size-``l`` superedges.  In
    ``"snapshot"`` mode qualifying sets are found against the incoming edge
    set, then all of their superedges are removed and the sets are added.
    In ``"sequential"`` mode candidates are visited in order of ``(l, S)`` and
    contracted only if the superedges still present meet the cut, so every
    contraction removes at least ``threshold(l)`` edges of its own.
    """
    if mode not in ("snapshot", "sequential"):
        raise ValueError(f"unknown reduction mode {mode!r}")
    by_size: dict[int, list[Edge]] = {}
    for e in edges:
        if len(e) > s:
            by_size.setdefault(len(e), []).append(e)
    contractions: list[Contraction] = []
    doomed: set[Edge] = set()
    added: set[Edge] = set()
    for l in range(s + 1, k + 1):
        sup = by_size.get(l)
        if not sup:
            continue
        cut = threshold(l)
        counts = Counter(S for e in sup for S in combinations(e, s))
        hot = {S: n for S, n in counts.items() if n >= cut}
        if not hot:
            continue
        if mode == "snapshot":
            for S in sorted(hot):
                contractions.append(Contraction(S, l, hot[S]))
            for e in sup:
                if any(S in hot for S in combinations(e, s)):
                    doomed.add(e)
            added.update(hot)
            continue
        holders: dict[Edge, list[Edge]] = {}
        for e in sup:
            for S in combinations(e, s):
                if S in hot:
                    holders.setdefault(S, []).append(e)
        for S in sorted(hot):
            live = [e for e in holders[S] if e not in doomed]
            if len(live) >= cut:
                contractions.append(Contraction(S, l, len(live)))
                doomed.update(live)
                added.add(S)
    if not contractions:
        return edges, contractions
    return (edges - doomed) | added, contractions


def reduce_edges(edges: Iterable[Edge], k: int, f: Threshold,
                 mode: str = "snapshot") -> tuple[set[Edge], list[ReductionRound]]:
    """Run the ``k - 2`` contraction rounds on a raw edge set."""
    current = set(edges)
    rounds = []
    for i in range(1, k - 1):
        s = k - i
        current, done = reduction_round(current, s, k, lambda l, s=s: f(s, l), mode)
        rounds.append(ReductionRound(i, s, done))
    return current, rounds


def f_reduce(h: Hypergraph, policy: Union[ReductionPolicy, Threshold, Mapping],
             k: Optional[int] = None, mode: str = "snapshot") -> ReductionTrace:
    """f-reduction of ``h``.

    Afterwards every ``(s, l)``-codegree with ``2 <= s < l <= k`` is at most
    ``f(s, l)``.  ``mode`` is passed to :func:`reduction_round`.
    """
    if not isinstance(policy, ReductionPolicy):
        policy = ReductionPolicy(policy)
    k = h.rank if k is None else k
    if h.rank > k:
        raise ValueError(f"hypergraph rank {h.rank} exceeds k={k}")
    policy.validate(k)
    final, rounds = reduce_edges(h.edges, k, policy, mode)
    return ReductionTrace(rounds, Hypergraph(h.num_vertices, final, max(h.rank, 2)))


def _is_proper(h: Hypergraph, coloring: Mapping[int, object]) -> bool:
    return all(len({coloring[v] for v in e}) > 1 for e in h.edges)


def check_soundness(original: Hypergraph, reduced: Hypergraph,
                    coloring: Mapping[int, object]) -> bool:
    """True iff properness on ``reduced`` implies properness on ``original``."""
    colors = getattr(coloring, "colors", coloring)
    return not _is_proper(reduced, colors) or _is_proper(original, colors)


# -- balancing -----------------------------------------------------------------

def lambda_degree(lam: float, k: int, i: int) -> float:
    """``lam**(1 - i/(k-1)) * log(lam)**(i/(k-1)) / (k 2**k)**(k-i)``."""
    a = i / (k - 1)
    return math.exp((1 - a) * math.log(lam) + a * math.log(math.log(lam))
                    - (k - i) * math.log(k * 2 ** k))


def solve_lambda(observed_degree: float, k: int, i: int, *, rtol: float = 1e-9,
                 max_iter: int = 200, full_output: bool = False):
    """Invert :func:`lambda_degree` for ``lam > e``.

    Bisection in ``log(lam)`` on a bracket ``[e, 2**j e]`` whose upper end is
    doubled until it overshoots.  A zero degree returns ``e`` with a warning.
    With ``full_output`` returns ``(lam, iterations)``.
    """
    if not 0 <= i <= k - 2:
        raise ValueError(f"round index {i} outside 0..{k - 2}")
    if observed_degree < 0:
        raise ValueError("observed degree must be non-negative")
    if observed_degree == 0:
        warnings.warn("observed degree 0; returning bracket minimum e", RuntimeWarning)
        return (math.e, 0) if full_output else math.e
    if i == 0:
        lam = observed_degree * float(k * 2 ** k) ** k
        return (lam, 0) if full_output else lam

    target = observed_degree
    lo = hi = math.log(math.e)
    iters = 0
    while lambda_degree(math.exp(hi), k, i) < target:
        lo = hi
        hi += math.log(2.0)
        iters += 1
    # invariant: g(exp(lo)) <= target <= g(exp(hi))
    mid = hi
    while iters < max_iter:
        mid = 0.5 * (lo + hi)
        val = lambda_degree(math.exp(mid), k, i)
        iters += 1
        if abs(val - target) <= rtol * target:
            break
        if val < target:
            lo = mid
        else:
            hi = mid
    else:
        log.warning("solve_lambda hit max_iter=%d", max_iter)
    lam = math.exp(mid)
    return (lam, iters) if full_output else lam


@dataclass
class BalancedReduction:
    hypergraph: Hypergraph
    delta: float
    lambdas: dict[int, float]
    trace: ReductionTrace

    def threshold(self, s: int, l: int) -> float:
        lam = self.lambdas[l]
        return (lam / math.log(lam)) ** ((l - s) / (self.hypergraph.rank - 1))


def balanced_reduce(h: Hypergraph, full_output: bool = False):
    """Adaptive reduction with per-size scales ``Lambda_l``.

    Starts from ``Lambda_k = (k 2**k)**k * Delta_k``; round ``i`` contracts
    ``(k-i)``-sets with codegree at least ``(Lambda_l / log Lambda_l)**((l-(k-i))/(k-1))``
    and then fits ``Lambda_{k-i}`` to the new maximum ``(k-i)``-degree.
    Returns ``(hypergraph, Delta)`` with ``Delta = max Lambda``, or a
    :class:`BalancedReduction` with ``full_output``.
    """
    k = h.rank
    if k < 3:
        raise ValueError("balanced reduction needs rank k >= 3")
    lambdas = {k: solve_lambda(h.degree_profile().delta(k), k, 0)}
    current = set(h.edges)
    rounds = []
    for i in range(1, k - 1):
        s = k - i

        def cut(l, s=s):
            lam = lambdas[l]
            return (lam / math.log(lam)) ** ((l - s) / (k - 1))

        current, done = reduction_round(current, s, k, cut)
        rounds.append(ReductionRound(i, s, done))
        out = Hypergraph(h.num_vertices, current, k)
        lambdas[s] = solve_lambda(out.degree_profile().delta(s), k, i)
    final = Hypergraph(h.num_vertices, current, k)
    delta = max(lambdas.values())
    if full_output:
        return BalancedReduction(final, delta, lambdas, ReductionTrace(rounds, final))
    return final, delta
