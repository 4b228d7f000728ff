"""Naive oracles.

Everything here reads only the raw edge tuples and never calls the indexed
queries of :mod:`hypernibble.hypercore`, so the two can check each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Mapping, Optional

from .hypercore import Edge, Hypergraph, TriangleWitness


@dataclass
class Report:
    monochromatic: list[Edge] = field(default_factory=list)
    list_violations: list[tuple[int, object]] = field(default_factory=list)
    uncolored: list[int] = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return bool(self.uncolored)

    @property
    def ok(self) -> bool:
        return not self.monochromatic and not self.list_violations and not self.uncolored

    def to_json(self) -> dict:
        return {"ok": self.ok, "partial": self.partial,
                "monochromatic": [list(e) for e in self.monochromatic],
                "list_violations": [[v, str(c)] for v, c in self.list_violations],
                "uncolored": self.uncolored}


def _colors(coloring) -> Mapping[int, object]:
    return getattr(coloring, "colors", coloring)


def verify_proper(h: Hypergraph, coloring) -> Report:
    """Every monochromatic edge; edges with an uncolored vertex are skipped
    and the report is flagged partial."""
    col = _colors(coloring)
    rep = Report(uncolored=[v for v in range(h.num_vertices) if v not in col])
    for e in h.edges:
        if any(v not in col for v in e):
            continue
        first = col[e[0]]
        if all(col[v] == first for v in e):
            rep.monochromatic.append(e)
    return rep


def verify_list(h: Hypergraph, lists: Mapping[int, Iterable], coloring) -> Report:
    """As :func:`verify_proper`, plus every vertex whose color is not in its list."""
    col = _colors(coloring)
    rep = verify_proper(h, coloring)
    for v in range(h.num_vertices):
        if v in col and col[v] not in set(lists.get(v, ())):
            rep.list_violations.append((v, col[v]))
    return rep


def _witnesses(e: Edge, f: Edge, g: Edge):
    se, sf, sg = set(e), set(f), set(g)
    common = se & sf & sg
    # u in g & e, v in e & f, w in f & g is forced by the definition
    for u in sorted(sg & se):
        for v in sorted(se & sf):
            for w in sorted(sf & sg):
                if len({u, v, w}) == 3 and not ({u, v, w} & common):
                    yield TriangleWitness((e, f, g), (u, v, w))


def brute_triangles(h: Hypergraph) -> set[TriangleWitness]:
    """All triangle witnesses over every ordered triple of distinct edges."""
    found = set()
    for e, f, g in permutations(h.edges, 3):
        found.update(_witnesses(e, f, g))
    return found


def brute_has_triangle(h: Hypergraph) -> bool:
    for e, f, g in combinations(h.edges, 3):
        if next(_witnesses(e, f, g), None) is not None:
            return True
    return False


def brute_degree(h: Hypergraph, v: int, size: int) -> int:
    return sum(1 for e in h.edges if len(e) == size and v in e)


def brute_codegree(h: Hypergraph, S: Iterable[int], size: int) -> int:
    S = set(S)
    return sum(1 for e in h.edges if len(e) == size and S <= set(e))


def brute_max_codegree(h: Hypergraph, s: int, size: int) -> int:
    """Max over all ``s``-subsets of the vertex set (not just those inside edges)."""
    best = 0
    for S in combinations(range(h.num_vertices), s):
        best = max(best, brute_codegree(h, S, size))
    return best


def codegree_violations(h: Hypergraph, f, k: Optional[int] = None) -> list[tuple[tuple[int, ...], int, int]]:
    """``(S, l, count)`` for every ``s``-set with more than ``f(s, l)`` size-``l``
    superedges, ``2 <= s < l <= k``.  Counts come from a plain scan of edges."""
    k = h.rank if k is None else k
    counts: dict[tuple[tuple[int, ...], int], int] = {}
    for e in h.edges:
        for s in range(2, len(e)):
            for S in combinations(e, s):
                counts[(S, len(e))] = counts.get((S, len(e)), 0) + 1
    return sorted((S, l, n) for (S, l), n in counts.items() if l <= k and n > f(len(S), l))


def is_proper(h: Hypergraph, coloring) -> bool:
    return not verify_proper(h, coloring).monochromatic


def soundness_counterexample(original: Hypergraph, reduced: Hypergraph,
                             colorings: Iterable[Mapping[int, object]]):
    """First coloring proper on ``reduced`` but not on ``original``, if any."""
    for col in colorings:
        if is_proper(reduced, col) and not is_proper(original, col):
            return col
    return None
