"""Deterministic seeded graph generators.

PRNG: numpy PCG64 seeded with the given 64-bit integer; randomness is drawn
exclusively through ``Generator.integers`` so byte streams (and therefore
generated graphs and golden files) are reproducible. Uniform m-edge sampling
without replacement uses a partial Fisher-Yates shuffle over pair indices for
dense requests and ordered hash-set rejection otherwise; both consume the
stream deterministically.
"""

import numpy as np

from bicliques import kernels
from bicliques.errors import InvalidCounts
from bicliques.graph import BipartiteGraph, Graph

__all__ = ["gnm", "complete", "complete_bipartite_general", "bipartite_gnm",
           "matching_bipartite"]


def _rng(seed):
    if not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
        raise InvalidCounts(f"seed {seed!r} outside [0, 2^64)")
    return np.random.Generator(np.random.PCG64(seed))


def _sample_indices(total, m, rng):
    """m distinct indices from [0, total), sorted ascending."""
    if m > total // 2:
        pool = np.arange(total, dtype=np.int64)
        js = rng.integers(np.arange(m, dtype=np.int64), total, dtype=np.int64)
        kernels.fisher_yates_partial(pool, js)
        return np.sort(pool[:m])
    chosen = set()
    while len(chosen) < m:
        batch = rng.integers(0, total, size=(m - len(chosen)) * 5 // 4 + 16,
                             dtype=np.int64)
        for k in batch.tolist():
            chosen.add(k)
            if len(chosen) == m:
                break
    return np.sort(np.fromiter(chosen, dtype=np.int64, count=m))


def _pair_decode(k, n):
    """Invert the row-major upper-triangle pair enumeration."""
    kk = k.astype(np.float64)
    u = ((2 * n - 1) - np.sqrt((2 * n - 1) ** 2 - 8 * kk)) / 2
    u = u.astype(np.int64)
    u = np.maximum(u, 0)
    for _ in range(2):  # settle float rounding exactly
        start = u * (2 * n - u - 1) // 2
        u = np.where(start > k, u - 1, u)
        nxt = (u + 1) * (2 * n - u - 2) // 2
        u = np.where(nxt <= k, u + 1, u)
    start = u * (2 * n - u - 1) // 2
    v = k - start + u + 1
    return u, v


def gnm(n, m, seed):
    """Uniform random graph with exactly m edges; deterministic in (n, m, seed)."""
    if not isinstance(n, int) or n < 0:
        raise InvalidCounts(f"vertex count {n!r} invalid")
    total = n * (n - 1) // 2
    if not isinstance(m, int) or not 0 <= m <= total:
        raise InvalidCounts(f"edge count {m!r} outside [0, {total}]")
    if m == 0:
        return Graph._from_arrays(n, np.empty(0, np.int64), np.empty(0, np.int64))
    ks = _sample_indices(total, m, _rng(seed))
    u, v = _pair_decode(ks, n)
    return Graph._from_arrays(n, u, v)


def complete(n):
    if not isinstance(n, int) or n < 0:
        raise InvalidCounts(f"vertex count {n!r} invalid")
    u, v = np.triu_indices(n, 1)
    return Graph._from_arrays(n, u.astype(np.int64), v.astype(np.int64))


def complete_bipartite_general(s, t):
    """K_{s,t} as a general graph: side one is 0..s-1, side two s..s+t-1."""
    if not isinstance(s, int) or not isinstance(t, int) or s < 0 or t < 0:
        raise InvalidCounts(f"side sizes ({s!r}, {t!r}) invalid")
    u = np.repeat(np.arange(s, dtype=np.int64), t)
    v = s + np.tile(np.arange(t, dtype=np.int64), s)
    return Graph._from_arrays(s + t, u, v)


def bipartite_gnm(a, b, m, seed):
    """Uniform random bipartite graph with exactly m edges."""
    if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
        raise InvalidCounts(f"side sizes ({a!r}, {b!r}) invalid")
    total = a * b
    if not isinstance(m, int) or not 0 <= m <= total:
        raise InvalidCounts(f"edge count {m!r} outside [0, {total}]")
    if m == 0:
        return BipartiteGraph._from_arrays(a, b, np.empty(0, np.int64),
                                           np.empty(0, np.int64))
    ks = _sample_indices(total, m, _rng(seed))
    return BipartiteGraph._from_arrays(a, b, ks // b, ks % b)


def matching_bipartite(k):
    """Perfect matching on sides of size k: edges (i, i)."""
    if not isinstance(k, int) or k < 0:
        raise InvalidCounts(f"matching size {k!r} invalid")
    ids = np.arange(k, dtype=np.int64)
    return BipartiteGraph._from_arrays(k, k, ids, ids.copy())
