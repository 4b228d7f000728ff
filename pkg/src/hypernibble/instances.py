"""Seeded instance generators: uniform, mixed-rank, triangle-free, linear."""
from __future__ import annotations

import logging
import math
from itertools import combinations
from typing import Mapping

import numpy as np

from . import _rng
from .coloring import Color
from .hypercore import Edge, Hypergraph

log = logging.getLogger(__name__)


def _rng_for(seed: int, tag: int) -> np.random.Generator:
    return _rng.stream(seed, _rng.GENERATE, tag)


def _sample_sets(n: int, k: int, m: int, rng: np.random.Generator, taken=frozenset()) -> list[Edge]:
    total = math.comb(n, k)
    if m > total - len(taken):
        raise ValueError(f"cannot place {m} distinct {k}-sets on {n} vertices")
    if m == 0:
        return []
    if total <= 50_000 or 2 * (m + len(taken)) > total:
        pool = [e for e in combinations(range(n), k) if e not in taken]
        idx = rng.choice(len(pool), size=m, replace=False)
        return sorted(pool[j] for j in idx)
    out: set[Edge] = set()
    while len(out) < m:
        e = tuple(sorted(int(x) for x in rng.choice(n, size=k, replace=False)))
        if e not in taken:
            out.add(e)
    return sorted(out)


def gen_uniform(n: int, k: int, m: int, seed: int = 0) -> Hypergraph:
    """``m`` distinct uniformly random ``k``-sets on ``n`` vertices."""
    if k < 2 or k > max(n, 2):
        raise ValueError(f"edge size {k} infeasible on {n} vertices")
    return Hypergraph(n, _sample_sets(n, k, m, _rng_for(seed, k)), k)


def gen_mixed(n: int, counts: Mapping[int, int], seed: int = 0) -> Hypergraph:
    """Mixed-rank hypergraph with ``counts[l]`` uniformly random ``l``-sets."""
    edges: list[Edge] = []
    for size in sorted(counts):
        edges += _sample_sets(n, size, counts[size], _rng_for(seed, size))
    return Hypergraph(n, edges, max([2] + list(counts)))


def make_triangle_free(h: Hypergraph, seed: int = 0) -> Hypergraph:
    """Delete a uniformly chosen edge of the first triangle found until none remain."""
    rng = _rng_for(seed, 0)
    current = h
    while True:
        wit = current.find_triangle()
        if wit is None:
            return current
        victim = wit.edges[int(rng.integers(3))]
        current = current.with_edges(e for e in current.edges if e != victim)


def gen_linear(n: int, k: int, m: int, seed: int = 0, restarts: int = 1000) -> Hypergraph:
    """Random greedy packing of ``k``-sets meeting pairwise in at most one vertex.

    Restarts up to ``restarts`` times; if ``m`` edges are never reached the
    largest packing found is returned and a warning logged.
    """
    if k < 2 or k > n:
        raise ValueError(f"edge size {k} infeasible on {n} vertices")
    rng = _rng_for(seed, k)
    best: list[Edge] = []
    small = math.comb(n, k) <= 200_000
    cands = list(combinations(range(n), k)) if small else None
    for _ in range(restarts):
        used_pairs: set[tuple[int, int]] = set()
        packed: list[Edge] = []
        if small:
            stream = (cands[j] for j in rng.permutation(len(cands)))
        else:
            stream = (tuple(sorted(int(x) for x in rng.choice(n, size=k, replace=False)))
                      for _ in range(50 * m))
        for e in stream:
            pairs = list(combinations(e, 2))
            if any(p in used_pairs for p in pairs):
                continue
            packed.append(e)
            used_pairs.update(pairs)
            if len(packed) == m:
                break
        if len(packed) > len(best):
            best = packed
        if len(best) == m:
            break
    if len(best) < m:
        log.warning("linear packing reached %d of %d edges", len(best), m)
    return Hypergraph(n, best, k)


def random_lists(n: int, size: int, pool: int, seed: int = 0) -> dict[int, list[Color]]:
    """Lists of ``size`` colors ``c0 .. c{pool-1}`` drawn uniformly per vertex."""
    if size > pool:
        raise ValueError("list size exceeds the color pool")
    rng = _rng_for(seed, 1_000_003)
    return {v: [f"c{x}" for x in sorted(rng.choice(pool, size=size, replace=False))]
            for v in range(n)}
