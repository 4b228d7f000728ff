"""Rank-k hypergraphs with degree, codegree, neighborhood and triangle queries.

Vertices are dense integer ids ``0 .. num_vertices - 1``.  Edges are stored as
sorted tuples; the hypergraph is immutable once built.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, ...]


def as_edge(vertices: Iterable[int]) -> Edge:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class TriangleWitness:
    """Three distinct edges ``e, f, g`` and vertices ``u, v, w`` with
    ``{u,v} <= e``, ``{v,w} <= f``, ``{w,u} <= g`` and ``{u,v,w}`` disjoint
    from ``e & f & g``."""

    edges: tuple[Edge, Edge, Edge]
    vertices: tuple[int, int, int]

    def is_valid(self) -> bool:
        e, f, g = (set(x) for x in self.edges)
        u, v, w = self.vertices
        if len(set(self.edges)) != 3 or len({u, v, w}) != 3:
            return False
        if not ({u, v} <= e and {v, w} <= f and {w, u} <= g):
            return False
        return not ({u, v, w} & e & f & g)


@dataclass(frozen=True)
class DegreeProfile:
    """Maximum ``l``-degrees and maximum ``(s, l)``-codegrees.

    Sizes with no edges are absent from both maps.
    """

    max_degree: dict[int, int] = field(default_factory=dict)
    max_codegree: dict[tuple[int, int], int] = field(default_factory=dict)

    def delta(self, size: int) -> int:
        return self.max_degree.get(size, 0)

    def codelta(self, s: int, size: int) -> int:
        return self.max_codegree.get((s, size), 0)


class Hypergraph:
    """Immutable rank-``k`` hypergraph.

    Parameters
    ----------
    num_vertices : int
    edges : iterable of vertex collections
        Each edge must have between 2 and ``rank`` distinct vertices.
    rank : int, optional
        Maximum edge size; defaults to the largest edge (at least 2).
    allow_dup : bool
        Silently merge duplicate edges instead of raising.
    antichain : bool
        Require that no edge strictly contains another.
    """

    def __init__(self, num_vertices: int, edges: Iterable[Iterable[int]] = (),
                 rank: Optional[int] = None, *, allow_dup: bool = False,
                 antichain: bool = False):
        if num_vertices < 0:
            raise ValueError("num_vertices must be non-negative")
        canon = []
        for raw in edges:
            raw = list(raw)
            e = as_edge(raw)
            if len(set(e)) != len(e):
                raise ValueError(f"edge {raw} repeats a vertex")
            if len(e) < 2:
                raise ValueError(f"edge {raw} has fewer than 2 vertices")
            if e[0] < 0 or e[-1] >= num_vertices:
                raise ValueError(f"edge {raw} has a vertex outside 0..{num_vertices - 1}")
            canon.append(e)
        if rank is None:
            rank = max([2] + [len(e) for e in canon])
        if rank < 2:
            raise ValueError("rank must be at least 2")
        for e in canon:
            if len(e) > rank:
                raise ValueError(f"edge {e} exceeds rank {rank}")
        unique = set(canon)
        if len(unique) != len(canon) and not allow_dup:
            dups = sorted(e for e, n in Counter(canon).items() if n > 1)
            raise ValueError(f"duplicate edges: {dups[:5]}")

        self.num_vertices = num_vertices
        self.rank = rank
        self.edges: tuple[Edge, ...] = tuple(sorted(unique, key=lambda e: (len(e), e)))
        self._edge_set = frozenset(unique)
        self._incidence: Optional[dict[int, list[Edge]]] = None
        self._pair_index: Optional[dict[tuple[int, int], list[Edge]]] = None
        if antichain and not self.is_antichain():
            raise ValueError("an edge strictly contains another edge")

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.num_vertices}, rank={self.rank}, m={len(self.edges)})"

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return as_edge(edge) in self._edge_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.num_vertices == other.num_vertices and self.rank == other.rank
                and self._edge_set == other._edge_set)

    def __hash__(self) -> int:
        return hash((self.num_vertices, self.rank, self._edge_set))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def edges_of_size(self, size: int) -> list[Edge]:
        return [e for e in self.edges if len(e) == size]

    def with_edges(self, edges: Iterable[Iterable[int]], **kwargs) -> "Hypergraph":
        """New hypergraph on the same vertex set and rank."""
        return Hypergraph(self.num_vertices, edges, self.rank, **kwargs)

    # -- indexes -------------------------------------------------------------

    @property
    def incidence(self) -> dict[int, list[Edge]]:
        if self._incidence is None:
            inc: dict[int, list[Edge]] = defaultdict(list)
            for e in self.edges:
                for v in e:
                    inc[v].append(e)
            self._incidence = dict(inc)
        return self._incidence

    @property
    def pair_index(self) -> dict[tuple[int, int], list[Edge]]:
        if self._pair_index is None:
            idx: dict[tuple[int, int], list[Edge]] = defaultdict(list)
            for e in self.edges:
                for pair in combinations(e, 2):
                    idx[pair].append(e)
            self._pair_index = dict(idx)
        return self._pair_index

    def incident(self, v: int) -> list[Edge]:
        self._check_vertex(v)
        return self.incidence.get(v, [])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex {v} out of range 0..{self.num_vertices - 1}")

    def _check_size(self, size: int) -> None:
        if not 2 <= size <= self.rank:
            raise ValueError(f"edge size {size} outside 2..{self.rank}")

    # -- queries -------------------------------------------------------------

    def degree(self, v: int, size: int) -> int:
        """Number of size-``size`` edges containing ``v``."""
        self._check_vertex(v)
        self._check_size(size)
        return sum(1 for e in self.incidence.get(v, ()) if len(e) == size)

    def codegree(self, S: Iterable[int], size: int) -> int:
        """Number of size-``size`` edges containing every vertex of ``S``."""
        S = as_edge(S)
        if not 1 <= len(S) < size:
            raise ValueError(f"codegree needs 1 <= |S| < size, got |S|={len(S)}, size={size}")
        self._check_size(size)
        for v in S:
            self._check_vertex(v)
        if len(S) == 1:
            return self.degree(S[0], size)
        cands = self.pair_index.get((S[0], S[1]), ())
        s = set(S)
        return sum(1 for e in cands if len(e) == size and s.issubset(e))

    def degree_profile(self) -> DegreeProfile:
        deg: dict[int, Counter] = defaultdict(Counter)
        codeg: dict[tuple[int, int], Counter] = defaultdict(Counter)
        for e in self.edges:
            size = len(e)
            deg[size].update(e)
            for s in range(2, size):
                codeg[(s, size)].update(combinations(e, s))
        return DegreeProfile(
            max_degree={size: max(c.values()) for size, c in sorted(deg.items())},
            max_codegree={key: max(c.values()) for key, c in sorted(codeg.items())},
        )

    def neighborhood(self, v: int, depth: int = 1) -> set[int]:
        """Vertices sharing an edge with ``v`` (depth 1, ``v`` excluded) or the
        union of the depth-1 neighborhoods of those (depth 2, may contain ``v``)."""
        self._check_vertex(v)
        first = {x for e in self.incidence.get(v, ()) for x in e if x != v}
        if depth == 1:
            return first
        if depth != 2:
            raise ValueError("depth must be 1 or 2")
        out: set[int] = set()
        for x in first:
            out.update(y for e in self.incidence.get(x, ()) for y in e if y != x)
        return out

    def find_triangle(self) -> Optional[TriangleWitness]:
        """First triangle in a fixed deterministic search order, or ``None``.

        Pairs of edges ``(e, f)`` sharing a vertex ``v`` are extended through the
        pair index to an edge ``g`` containing ``{w, u}``.
        """
        pairs = self.pair_index
        for v in range(self.num_vertices):
            inc = self.incidence.get(v, ())
            for e in inc:
                for f in inc:
                    if f == e:
                        continue
                    ef = set(e).intersection(f)
                    for u in e:
                        if u == v:
                            continue
                        for w in f:
                            if w == v or w == u:
                                continue
                            for g in pairs.get((min(u, w), max(u, w)), ()):
                                if g == e or g == f:
                                    continue
                                if not ef.intersection(g).intersection((u, v, w)):
                                    return TriangleWitness((e, f, g), (u, v, w))
        return None

    def is_triangle_free(self) -> bool:
        return self.find_triangle() is None

    def is_antichain(self) -> bool:
        """True when no edge strictly contains another edge."""
        if not self.edges:
            return True
        smallest = len(self.edges[0])
        for e in self.edges:
            for s in range(smallest, len(e)):
                for sub in combinations(e, s):
                    if sub in self._edge_set:
                        return False
        return True
