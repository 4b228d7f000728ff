import numpy as np
import pytest
from hypothesis import strategies as st

from hypernibble import Hypergraph


def random_hypergraph(rng: np.random.Generator, n: int, rank: int, m: int) -> Hypergraph:
    """Up to ``m`` distinct random edges with sizes 2..rank."""
    edges = set()
    for _ in range(m):
        size = int(rng.integers(2, rank + 1))
        edges.add(tuple(sorted(int(x) for x in rng.choice(n, size=size, replace=False))))
    return Hypergraph(n, edges, rank)


@st.composite
def hypergraphs(draw, max_n=9, max_rank=4, max_edges=14):
    n = draw(st.integers(4, max_n))
    rank = draw(st.integers(2, min(max_rank, n)))
    edge = st.lists(st.integers(0, n - 1), min_size=2, max_size=rank, unique=True)
    edges = draw(st.lists(edge, max_size=max_edges))
    return Hypergraph(n, edges, rank, allow_dup=True)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
