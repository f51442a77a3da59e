import numpy as np
import pytest

from bicliques.gen import gnm
from bicliques.graph import Graph


def build(n, edges):
    return Graph.from_edge_list(n, edges)


def path_graph(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def naive_common_outside(g, C, R):
    """Double loop over all vertices and all of C; the reference for
    common_neighbors_outside."""
    out = []
    for w in range(g.n):
        if w in R:
            continue
        if all(g.adjacent(w, v) for v in C):
            out.append(w)
    return out


def random_graph_suite(count, max_n, seed0=1000):
    """Seeded graphs across the density range, small enough for unit tests."""
    graphs = []
    rng = np.random.default_rng(seed0)
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        total = n * (n - 1) // 2
        m = int(rng.integers(1, total + 1))
        graphs.append(gnm(n, m, seed0 + i))
    return graphs


@pytest.fixture
def k4():
    from bicliques.gen import complete

    return complete(4)
