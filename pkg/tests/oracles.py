"""Independent brute-force checks used by several test files."""
import numpy as np


def all_colorings(n: int, q: int) -> np.ndarray:
    """Every map {0..n-1} -> {0..q-1}, one per row (q**n rows)."""
    codes = np.arange(q ** n, dtype=np.int64)
    return np.stack([(codes // q ** j) % q for j in range(n)], axis=1).astype(np.int8)


def proper_mask(edges, cols: np.ndarray) -> np.ndarray:
    """Row-wise: no edge monochromatic."""
    ok = np.ones(len(cols), dtype=bool)
    for e in edges:
        sub = cols[:, list(e)]
        ok &= ~(sub == sub[:, :1]).all(axis=1)
    return ok


def soundness_violations(original, reduced, q: int) -> int:
    """Colorings with at most ``q`` colors proper on ``reduced`` but not on ``original``."""
    cols = all_colorings(original.num_vertices, q)
    return int((proper_mask(reduced.edges, cols) & ~proper_mask(original.edges, cols)).sum())


def max_codegrees(edges):
    """{(s, l): max number of l-edges over s-sets}, by direct counting."""
    from itertools import combinations
    counts = {}
    for e in edges:
        for s in range(2, len(e)):
            for S in combinations(sorted(e), s):
                counts[(S, len(e))] = counts.get((S, len(e)), 0) + 1
    out = {}
    for (S, l), n in counts.items():
        key = (len(S), l)
        out[key] = max(out.get(key, 0), n)
    return out
