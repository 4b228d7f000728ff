"""Codegree reduction: contract crowded vertex sets into smaller edges.

If a pair S sits in at least f(2, 3) triples, every coloring that is proper
on the edge S is proper on all those triples, so they can be swapped for S.
"""
import numpy as np

from hypernibble import Hypergraph, ReductionPolicy, balanced_reduce, check_soundness, f_reduce
from hypernibble.verify import codegree_violations

h = Hypergraph(5, [(1, 2, 3), (1, 2, 4)])
tr = f_reduce(h, {(2, 3): 2})
print("{123, 124} with f(2,3)=2 ->", tr.final.edges)
for r in tr.rounds:
    for con in r.contractions:
        print(f"  round {r.index}: {con.vertices} replaced {con.removed} edges of size {con.size}")

# A random rank-4 hypergraph and the geometric policy f(s, l) = 2**(l-s).
rng = np.random.default_rng(0)
edges = {tuple(sorted(rng.choice(14, size=int(rng.integers(3, 5)), replace=False))) for _ in range(70)}
h = Hypergraph(14, edges, 4)
f = ReductionPolicy.geometric(2.0)
out = f_reduce(h, f).final
print(f"\nrandom rank-4: {len(h)} edges -> {len(out)} edges; "
      f"codegree violations before {len(codegree_violations(h, f))}, after {len(codegree_violations(out, f))}")

# Soundness on a sample of random colorings.
cols = [dict(enumerate(rng.integers(0, 3, size=14))) for _ in range(2000)]
print("proper on reduced => proper on original for all samples:",
      all(check_soundness(h, out, col) for col in cols))

# The sequential variant never raises the weighted degree sum_e w**(k-|e|).
h = Hypergraph(5, [(0, 1, 2), (0, 1, 3), (0, 2, 4)])
for mode in ("snapshot", "sequential"):
    got = f_reduce(h, f, mode=mode).final
    weight = sum(2.0 ** (3 - len(e)) for e in got.edges if 0 in e)
    print(f"{mode:10s} {got.edges}  weighted degree of 0: {weight:g} (was 3)")

# Balanced mode picks the thresholds from the degrees it sees.
heavy = Hypergraph(1002, [(0, 1, x) for x in range(2, 1002)])
res = balanced_reduce(heavy, full_output=True)
print(f"\n1000 triples on the pair 01: Lambda_3 = {res.lambdas[3]:.3g}, "
      f"cut {res.threshold(2, 3):.1f} -> {res.hypergraph.edges}")
