"""Equivalence of the compiled and pure-Python kernel backends, and of the
library results computed through each."""

import numpy as np
import pytest

from bicliques import kernels
from bicliques.kernels import available_backends, backend_module, make_mask, words_for

HAVE_C = "c" in available_backends()

pytestmark = pytest.mark.skipif(not HAVE_C, reason="compiled backend not built")

KERNEL_NAMES = [
    "set_bits_bulk", "top_r_select", "scan_lex_subsets",
    "delete_biclique_general", "delete_biclique_bipartite",
    "extract_edges_general", "extract_edges_bipartite", "fisher_yates_partial",
]


@pytest.fixture
def backends():
    return backend_module("c"), backend_module("py")


def random_words(rng, n):
    W = words_for(n)
    words = np.zeros((n, W), dtype=np.uint64)
    total = n * (n - 1) // 2
    m = int(rng.integers(0, total + 1))
    ks = np.sort(rng.choice(total, size=m, replace=False).astype(np.int64))
    u = np.zeros(m, np.int64)
    v = np.zeros(m, np.int64)
    for i, k in enumerate(ks.tolist()):
        uu = 0
        while (uu + 1) * (2 * n - uu - 2) // 2 <= k:
            uu += 1
        u[i] = uu
        v[i] = k - uu * (2 * n - uu - 1) // 2 + uu + 1
    backend_module("py").set_bits_bulk(words, np.concatenate([u, v]),
                                       np.concatenate([v, u]))
    deg = np.bincount(np.concatenate([u, v]), minlength=n).astype(np.int64)
    return words, deg, m


def assert_same(a, b):
    assert type(a) is type(b) or (a is None) == (b is None)
    if isinstance(a, tuple):
        for x, y in zip(a, b):
            assert_same(x, y)
    elif isinstance(a, np.ndarray):
        assert np.array_equal(a, b)
    else:
        assert a == b


def test_contract_surface(backends):
    ck, pk = backends
    for name in KERNEL_NAMES:
        assert hasattr(ck, name) and hasattr(pk, name)


def test_scan_and_select_equivalence(backends):
    ck, pk = backends
    rng = np.random.default_rng(909)
    for trial in range(150):
        n = int(rng.integers(2, 70))
        words, deg, m = random_words(rng, n)
        r = int(rng.integers(0, n + 1))
        assert_same(ck.top_r_select(deg, r), pk.top_r_select(deg, r))
        q = int(rng.integers(1, 4))
        rr = int(rng.integers(q, n + 1)) if n >= q else q
        cand = pk.top_r_select(deg, min(rr, n))
        if len(cand) < q:
            continue
        forbid = make_mask(cand, words.shape[1])
        lo = int(rng.integers(0, len(cand)))
        hi = int(rng.integers(lo, len(cand) + 1))
        res_c = ck.scan_lex_subsets(words, cand, q, forbid, lo, hi)
        res_p = pk.scan_lex_subsets(words, cand, q, forbid, lo, hi)
        assert_same(res_c, res_p)


def test_delete_and_extract_equivalence(backends):
    ck, pk = backends
    rng = np.random.default_rng(910)
    for trial in range(100):
        n = int(rng.integers(2, 60))
        words, deg, m = random_words(rng, n)
        w2, d2 = words.copy(), deg.copy()
        e_c = ck.extract_edges_general(words, n)
        e_p = pk.extract_edges_general(w2, n)
        assert_same(e_c, e_p)
        assert len(e_c[0]) == m
        if m:
            k = int(rng.integers(0, m))
            left = np.array([e_c[0][k]], np.int64)
            right = np.array([e_c[1][k]], np.int64)
            assert_same(ck.delete_biclique_general(words, deg, left, right),
                        pk.delete_biclique_general(w2, d2, left, right))
            assert np.array_equal(words, w2) and np.array_equal(deg, d2)
        # a guaranteed-missing pair reports identically and mutates nothing
        miss_l = np.array([0], np.int64)
        miss_v = np.array([0], np.int64)
        r1 = ck.delete_biclique_general(words, deg, miss_l, miss_v)
        r2 = pk.delete_biclique_general(w2, d2, miss_l, miss_v)
        assert r1 == r2 == (0, 0)  # (0,0) is never an edge
        assert np.array_equal(words, w2)


def test_bipartite_kernels_equivalence(backends):
    ck, pk = backends
    rng = np.random.default_rng(911)
    for trial in range(80):
        b, a = int(rng.integers(1, 40)), int(rng.integers(1, 40))
        W = words_for(a)
        m = int(rng.integers(0, a * b + 1))
        ks = rng.choice(a * b, size=m, replace=False).astype(np.int64)
        rows, cols = ks // a, ks % a
        w1 = np.zeros((b, W), np.uint64)
        pk.set_bits_bulk(w1, rows, cols)
        w2 = w1.copy()
        db1 = np.bincount(rows, minlength=b).astype(np.int64)
        da1 = np.bincount(cols, minlength=a).astype(np.int64)
        db2, da2 = db1.copy(), da1.copy()
        assert_same(ck.extract_edges_bipartite(w1, a), pk.extract_edges_bipartite(w2, a))
        if m:
            i = int(rng.integers(0, m))
            lb = np.array([rows[i]], np.int64)
            ra = np.array([cols[i]], np.int64)
            assert_same(ck.delete_biclique_bipartite(w1, db1, da1, lb, ra),
                        pk.delete_biclique_bipartite(w2, db2, da2, lb, ra))
            assert np.array_equal(w1, w2)
            assert np.array_equal(db1, db2) and np.array_equal(da1, da2)


def test_fisher_yates_equivalence(backends):
    ck, pk = backends
    rng = np.random.default_rng(912)
    for total in (1, 5, 100, 1000):
        m = max(1, total // 2)
        js = rng.integers(np.arange(m), total).astype(np.int64)
        p1 = np.arange(total, dtype=np.int64)
        p2 = p1.copy()
        ck.fisher_yates_partial(p1, js)
        pk.fisher_yates_partial(p2, js)
        assert np.array_equal(p1, p2)


def test_library_results_identical_across_backends(monkeypatch):
    """Force each backend through the dispatch layer and compare end to end."""
    from bicliques.decomposer import decompose, decomposition_to_json
    from bicliques.finder import find_biclique
    from bicliques.gen import gnm

    results = {}
    for name in ("c", "py"):
        impl = backend_module(name)
        for fn in KERNEL_NAMES:
            monkeypatch.setattr(kernels, fn, getattr(impl, fn))
        g = gnm(150, 3000, 77)
        rep = find_biclique(g)
        d = decompose(g)
        results[name] = (rep, decomposition_to_json(d))
    assert results["c"] == results["py"]
