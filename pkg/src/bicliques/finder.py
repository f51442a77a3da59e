"""Balanced-biclique search.

Restrict candidates to the r highest-degree vertices, scan their q-subsets in
lexicographic order, and return the first subset whose common neighborhood
outside the pool has at least q vertices (paired with the q lowest such ids).
``find_biclique`` wraps the scan with the closed-form parameters and a
fallback ladder q-1, q-2, ..., 1 so it succeeds on every graph with an edge.

``subsets_scanned`` is the lexicographic rank (1-based) of the returned
subset, or C(r, q) summed over attempts when a scan fails; it is identical
for single- and multi-threaded execution and across kernel backends.
"""

import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from bicliques import kernels
from bicliques.errors import EmptyGraph, InvalidCounts
from bicliques.params import (
    Regime,
    bipartite_params,
    bipartite_pool_size,
    general_params,
    pool_size,
)

__all__ = ["Biclique", "FindReport", "find_biclique_with_params", "find_biclique",
           "find_biclique_bipartite"]


@dataclass(frozen=True)
class Biclique:
    """Disjoint vertex sets with every cross pair adjacent; sides ascending.

    For bipartite inputs ``left`` holds internal-B ids and ``right``
    internal-A ids (see BipartiteGraph for the orientation convention).
    """

    left: tuple
    right: tuple


@dataclass(frozen=True)
class FindReport:
    biclique: Biclique
    q_target: int
    q_achieved: int
    fallback_used: bool
    subsets_scanned: int
    regime: Regime


def default_threads():
    try:
        return max(1, int(os.environ.get("BICLIQUES_THREADS", "1")))
    except ValueError:
        return 1


def _scan(words, cand, q, forbid, threads):
    """Lexicographically-first successful q-subset of cand, its q lowest
    common neighbors, and the subset's 1-based rank (total count on miss)."""
    r = len(cand)
    if q > r:
        return None, None, 0
    nblocks = r - q + 1
    if threads <= 1 or nblocks <= 1:
        return kernels.scan_lex_subsets(words, cand, q, forbid, 0, nblocks)

    offsets = [0] * nblocks
    for i in range(1, nblocks):
        offsets[i] = offsets[i - 1] + math.comb(r - i, q - 1)
    total = math.comb(r, q)
    lock = threading.Lock()
    best = [total, None, None]  # rank, c_ids, d_ids

    def worker(t):
        for i in range(t, nblocks, threads):
            with lock:
                if offsets[i] >= best[0]:
                    continue
            c, d, sc = kernels.scan_lex_subsets(words, cand, q, forbid, i, i + 1)
            if c is not None:
                rank = offsets[i] + sc - 1
                with lock:
                    if rank < best[0]:
                        best[0], best[1], best[2] = rank, c, d

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(worker, range(threads)))
    if best[1] is None:
        return None, None, math.comb(r, q)
    return best[1], best[2], best[0] + 1


def _attempt_general(g, q, r, threads):
    cand = kernels.top_r_select(g._deg, r)
    forbid = kernels.make_mask(cand, g._W)
    c, d, scanned = _scan(g._adj, cand, q, forbid, threads)
    if c is None:
        return None, scanned
    return Biclique(tuple(c.tolist()), tuple(d.tolist())), scanned


_ZERO_MASKS = {}


def _attempt_bipartite(bg, q, r, threads):
    cand = kernels.top_r_select(bg._deg_b, r)
    forbid = _ZERO_MASKS.get(bg._Wa)
    if forbid is None:
        forbid = _ZERO_MASKS[bg._Wa] = np.zeros(bg._Wa, dtype=np.uint64)
    c, d, scanned = _scan(bg._adj_b, cand, q, forbid, threads)
    if c is None:
        return None, scanned
    return Biclique(tuple(c.tolist()), tuple(d.tolist())), scanned


def find_biclique_with_params(g, q, r, threads=None):
    """Run the scan at explicit (q, r); None when no q-subset succeeds."""
    if not (isinstance(q, int) and isinstance(r, int) and 1 <= q <= r <= g.n - q):
        raise InvalidCounts(f"need 1 <= q <= r <= n - q, got q={q!r}, r={r!r}")
    threads = default_threads() if threads is None else threads
    bic, _ = _attempt_general(g, q, r, threads)
    return bic


def find_biclique(g, threads=None):
    """Total search: closed-form (q, r), then the ladder, then a single edge."""
    if g.m == 0:
        raise EmptyGraph()
    threads = default_threads() if threads is None else threads
    ps = general_params(g.n, g.m)
    scanned = 0
    for q_try in range(ps.q, 0, -1):
        r_try = pool_size(q_try, g.n, g.m)
        bic, sc = _attempt_general(g, q_try, r_try, threads)
        scanned += sc
        if bic is not None:
            fallback = q_try < ps.q or ps.regime is Regime.BELOW_THRESHOLD
            return FindReport(bic, ps.q, q_try, fallback, scanned, ps.regime)
    # every candidate's neighbors lie inside the pool at every rung
    u, v = g.first_edge()
    return FindReport(Biclique((u,), (v,)), ps.q, 1, True, scanned, ps.regime)


def find_biclique_bipartite(bg, threads=None):
    """Bipartite variant: pool from side B, neighborhoods in side A (no
    pool subtraction; the sides are disjoint by construction)."""
    if bg.m == 0:
        raise EmptyGraph()
    threads = default_threads() if threads is None else threads
    ps = bipartite_params(bg.a, bg.b, bg.m)
    scanned = 0
    for q_try in range(ps.q, 0, -1):
        r_try = bipartite_pool_size(q_try, bg.a, bg.b, bg.m)
        bic, sc = _attempt_bipartite(bg, q_try, r_try, threads)
        scanned += sc
        if bic is not None:
            fallback = q_try < ps.q or ps.regime is Regime.BELOW_THRESHOLD
            return FindReport(bic, ps.q, q_try, fallback, scanned, ps.regime)
    b_id, a_id = bg.first_edge_internal()
    return FindReport(Biclique((b_id,), (a_id,)), ps.q, 1, True, scanned, ps.regime)


def check_biclique(g, bic):
    """Problem list for a biclique against a general graph (empty = valid)."""
    problems = []
    left, right = bic.left, bic.right
    if len(left) != len(right) or len(left) < 1:
        problems.append("sides must be nonempty and balanced")
    if set(left) & set(right):
        problems.append("sides must be disjoint")
    if list(left) != sorted(set(left)) or list(right) != sorted(set(right)):
        problems.append("sides must be ascending without repeats")
    for u in left:
        for v in right:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.adjacent(u, v):
                problems.append(f"missing cross edge ({u}, {v})")
    return problems


def check_biclique_bipartite(bg, bic):
    """Problem list for a biclique (internal coordinates) on a bipartite graph."""
    problems = []
    left, right = bic.left, bic.right
    if len(left) != len(right) or len(left) < 1:
        problems.append("sides must be nonempty and balanced")
    if list(left) != sorted(set(left)) or list(right) != sorted(set(right)):
        problems.append("sides must be ascending without repeats")
    for b_id in left:
        for a_id in right:
            if not (0 <= b_id < bg.b and 0 <= a_id < bg.a) or not bg.adjacent_internal(b_id, a_id):
                problems.append(f"missing cross edge (b={b_id}, a={a_id})")
    return problems
