"""Exhaustive reference procedures for small-scale cross-validation.

These deliberately avoid the production code paths: adjacency is rebuilt
from the edge list, and the subset scan is a plain nested loop over Python
sets. They exist to be compared against, not to be fast.
"""

from itertools import combinations

from bicliques.errors import InvalidCounts, TooLarge
from bicliques.finder import Biclique

__all__ = ["max_balanced_biclique", "reference_find", "DEFAULT_SIZE_LIMIT"]

DEFAULT_SIZE_LIMIT = 24


def _neighbor_bitsets(g):
    rows = [0] * g.n
    us, vs = g.edges()
    for u, v in zip(us.tolist(), vs.tolist()):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def max_balanced_biclique(g, size_limit=DEFAULT_SIZE_LIMIT):
    """Largest q with disjoint q-sets fully joined, with the lexicographically
    smallest (left, right) witness; (0, None) exactly when there are no edges."""
    if g.n > size_limit:
        raise TooLarge(g.n, size_limit)
    if g.m == 0:
        return 0, None
    rows = _neighbor_bitsets(g)
    degs = [r.bit_count() for r in rows]
    for q in range(min(g.n // 2, max(degs)), 0, -1):
        eligible = [v for v in range(g.n) if degs[v] >= q]
        if len(eligible) < q:
            continue
        for C in combinations(eligible, q):
            d = rows[C[0]]
            for v in C[1:]:
                d &= rows[v]
            if d.bit_count() >= q:
                right = []
                while len(right) < q:
                    lsb = d & -d
                    right.append(lsb.bit_length() - 1)
                    d ^= lsb
                return q, Biclique(tuple(C), tuple(right))
    raise AssertionError("unreachable: a graph with an edge contains a 1x1 biclique")


def reference_find(g, q, r):
    """Naive re-implementation of the candidate-pool scan: Python sets, no
    bitsets, no short-circuiting. Must agree exactly with the fast path."""
    if not (isinstance(q, int) and isinstance(r, int) and 1 <= q <= r <= g.n - q):
        raise InvalidCounts(f"need 1 <= q <= r <= n - q, got q={q!r}, r={r!r}")
    nbrs = [set() for _ in range(g.n)]
    us, vs = g.edges()
    for u, v in zip(us.tolist(), vs.tolist()):
        nbrs[u].add(v)
        nbrs[v].add(u)
    degs = [len(s) for s in nbrs]
    by_rank = sorted(range(g.n), key=lambda v: (-degs[v], v))
    pool = sorted(by_rank[:r])
    pool_set = set(pool)
    for C in combinations(pool, q):
        common = set(nbrs[C[0]])
        for v in C[1:]:
            common &= nbrs[v]
        common -= pool_set
        if len(common) >= q:
            return Biclique(tuple(C), tuple(sorted(common)[:q]))
    return None
