import numpy as np
import pytest

from bicliques.errors import InvalidCounts
from bicliques.gen import (
    bipartite_gnm,
    complete,
    complete_bipartite_general,
    gnm,
    matching_bipartite,
)
from bicliques.io import serialize_bipartite, serialize_graph

# pinned outputs for the documented PRNG (PCG64 + Generator.integers);
# covers both sampling paths (dense partial Fisher-Yates, sparse rejection)
GOLDEN = {
    (10, 15, 1): "10 15\n0 2\n0 7\n1 4\n1 5\n1 7\n2 4\n2 5\n2 7\n2 9\n3 4\n3 8\n"
                 "4 8\n5 8\n6 7\n7 8\n",
    (12, 40, 2): "12 40\n0 1\n0 2\n0 3\n0 5\n0 7\n0 9\n0 10\n0 11\n1 3\n1 8\n1 9\n"
                 "2 3\n2 4\n2 5\n2 8\n2 9\n2 10\n2 11\n3 4\n3 7\n3 8\n3 11\n4 6\n"
                 "4 9\n4 10\n4 11\n5 7\n5 8\n5 9\n5 10\n6 7\n6 9\n6 10\n6 11\n7 8\n"
                 "7 11\n8 10\n9 10\n9 11\n10 11\n",
    (9, 5, 3): "9 5\n0 4\n0 7\n1 2\n4 7\n4 8\n",
}

GOLDEN_BIPARTITE = "4 6 7\n0 0\n1 0\n1 5\n2 0\n2 3\n2 4\n3 1\n"


class TestGnm:
    def test_maximal_is_complete(self):
        g = gnm(10, 45, 12345)
        assert g.m == 45
        assert g == complete(10)

    def test_empty(self):
        g = gnm(10, 0, 0)
        assert g.m == 0 and g.n == 10

    def test_deterministic(self):
        a = gnm(100, 500, 7)
        b = gnm(100, 500, 7)
        assert a == b
        assert serialize_graph(a) == serialize_graph(b)

    def test_seed_sensitivity(self):
        assert gnm(100, 500, 7) != gnm(100, 500, 8)

    def test_counts_and_validity(self):
        rng = np.random.default_rng(2)
        for i in range(30):
            n = int(rng.integers(1, 80))
            total = n * (n - 1) // 2
            m = int(rng.integers(0, total + 1))
            g = gnm(n, m, 2000 + i)
            assert g.m == m
            assert g.audit() == []

    def test_golden_files(self):
        for (n, m, seed), want in GOLDEN.items():
            assert serialize_graph(gnm(n, m, seed)) == want

    def test_invalid(self):
        with pytest.raises(InvalidCounts):
            gnm(4, 7, 0)
        with pytest.raises(InvalidCounts):
            gnm(-1, 0, 0)
        with pytest.raises(InvalidCounts):
            gnm(4, 1, -3)

    def test_mean_degree_sanity(self):
        n, m = 100, 495
        means = [float(gnm(n, m, s).degrees().mean()) for s in range(1000)]
        overall = sum(means) / len(means)
        assert abs(overall - 9.9) <= 0.3
        assert all(abs(x - 9.9) <= 0.3 for x in means)


def test_pair_decode_exhaustive():
    from bicliques.gen import _pair_decode

    for n in (2, 3, 7, 64, 101):
        total = n * (n - 1) // 2
        ks = np.arange(total, dtype=np.int64)
        u, v = _pair_decode(ks, n)
        want = [(a, b) for a in range(n) for b in range(a + 1, n)]
        assert list(zip(u.tolist(), v.tolist())) == want


class TestStructured:
    def test_complete(self):
        g = complete(4)
        assert g.m == 6 and g.degrees().tolist() == [3, 3, 3, 3]

    def test_complete_bipartite_general(self):
        g = complete_bipartite_general(2, 3)
        assert g.m == 6
        assert not g.adjacent(0, 1)
        assert not g.adjacent(2, 3) and not g.adjacent(3, 4)
        assert all(g.adjacent(u, v) for u in (0, 1) for v in (2, 3, 4))

    def test_matching(self):
        bg = matching_bipartite(5)
        assert bg.m == 5
        assert all(bg.has_edge(i, i) for i in range(5))
        assert not bg.has_edge(0, 1)


class TestBipartiteGnm:
    def test_counts(self):
        bg = bipartite_gnm(7, 11, 50, 4)
        assert bg.m == 50 and bg.orig_a == 7 and bg.orig_b == 11
        assert bg.audit() == []

    def test_deterministic_golden(self):
        assert serialize_bipartite(bipartite_gnm(4, 6, 7, 5)) == GOLDEN_BIPARTITE

    def test_complete_case(self):
        bg = bipartite_gnm(3, 4, 12, 9)
        assert bg.m == 12
        assert all(bg.has_edge(u, v) for u in range(3) for v in range(4))
