import numpy as np
import pytest
from hypothesis import strategies as st

from specbisect.graph import Graph


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = rng.permutation(n)
    edges = {tuple(sorted((int(order[i]), int(order[rng.integers(i)])))) for i in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(e for e, keep in zip(pairs, mask) if keep))


@st.composite
def connected_graphs(draw, min_n=2, max_n=10):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_n, max_n))
    p = draw(st.floats(0.0, 1.0))
    return random_connected_graph(np.random.default_rng(seed), n, p)


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)
