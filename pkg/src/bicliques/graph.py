"""Graph and bipartite-graph representations.

Adjacency is stored as packed 64-bit words, one bitset row per vertex, so
intersecting q neighborhood rows restricted to a vertex subset costs
O(q * n / 64) word operations. Degrees are maintained incrementally under
edge deletion; the vertex count never changes.
"""

import numpy as np

from bicliques import kernels
from bicliques.errors import (
    DuplicateEdge,
    EmptyQuerySet,
    InvalidCounts,
    MissingEdge,
    SelfLoop,
    VertexOutOfRange,
)

__all__ = ["Graph", "BipartiteGraph"]


def _first_duplicate(keys):
    """Input index of the second occurrence of the earliest duplicated key."""
    order = np.argsort(keys, kind="stable")
    eq = keys[order[1:]] == keys[order[:-1]]
    if not eq.any():
        return None
    return int(order[1:][eq].min())


def _validate_pairs(u, v, n, allow_any_order):
    """Raise the error for the first offending input pair, if any."""
    bad_u = (u < 0) | (u >= n)
    bad_v = (v < 0) | (v >= n)
    events = []
    if bad_u.any() or bad_v.any():
        iu = int(np.argmax(bad_u)) if bad_u.any() else len(u)
        iv = int(np.argmax(bad_v)) if bad_v.any() else len(v)
        if iu <= iv:
            events.append((iu, 0, VertexOutOfRange(int(u[iu]), n)))
        else:
            events.append((iv, 0, VertexOutOfRange(int(v[iv]), n)))
    if allow_any_order:
        self_mask = u == v
        if self_mask.any():
            i = int(np.argmax(self_mask))
            events.append((i, 1, SelfLoop(int(u[i]))))
        lo, hi = np.minimum(u, v), np.maximum(u, v)
    else:
        lo, hi = u, v
    dup = _first_duplicate(lo.astype(np.int64) * np.int64(n) + hi)
    if dup is not None:
        events.append((dup, 2, DuplicateEdge(int(lo[dup]), int(hi[dup]))))
    if events:
        events.sort(key=lambda e: (e[0], e[1]))
        raise events[0][2]


class Graph:
    """Undirected simple graph over vertex ids 0..n-1."""

    __slots__ = ("n", "m", "_W", "_adj", "_deg")

    def __init__(self, n, adj, deg, m):
        self.n = n
        self.m = m
        self._W = adj.shape[1]
        self._adj = adj
        self._deg = deg

    @classmethod
    def from_edge_list(cls, n, edges):
        """Build from unordered vertex pairs; duplicates are hard errors."""
        if not isinstance(n, int) or n < 0:
            raise InvalidCounts(f"vertex count {n!r} invalid")
        pairs = np.array(edges, dtype=np.int64).reshape(-1, 2)
        u, v = pairs[:, 0].copy(), pairs[:, 1].copy()
        _validate_pairs(u, v, n, allow_any_order=True)
        return cls._from_arrays(n, u, v)

    @classmethod
    def _from_arrays(cls, n, u, v):
        """Trusted constructor: pairs already distinct, in range, u != v."""
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        W = kernels.words_for(n)
        adj = np.zeros((n, W), dtype=np.uint64)
        kernels.set_bits_bulk(adj, lo, hi)
        kernels.set_bits_bulk(adj, hi, lo)
        deg = np.bincount(np.concatenate([lo, hi]), minlength=n).astype(np.int64)
        return cls(n, adj, deg, len(lo))

    def copy(self):
        return Graph(self.n, self._adj.copy(), self._deg.copy(), self.m)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self._adj, other._adj)
        )

    def adjacent(self, u, v):
        return bool((int(self._adj[u, v >> 6]) >> (v & 63)) & 1)

    def degree(self, v):
        return int(self._deg[v])

    def degrees(self):
        return self._deg.copy()

    def neighbors(self, v):
        """Neighbor ids of v, ascending."""
        row = np.unpackbits(self._adj[v : v + 1].view(np.uint8), bitorder="little")
        return np.nonzero(row[: self.n])[0].astype(np.int64)

    def edges(self):
        """All edges as (u, v) arrays with u < v, ascending (u, v)."""
        return kernels.extract_edges_general(self._adj, self.n)

    def first_edge(self):
        """Lowest-lexicographic edge (min endpoint, then max), or None."""
        nz = np.nonzero(self._deg)[0]
        if len(nz) == 0:
            return None
        u = int(nz[0])
        row = self._adj[u]
        w = int(np.nonzero(row)[0][0])
        word = int(row[w])
        return u, (w << 6) + ((word & -word).bit_length() - 1)

    def top_degree_vertices(self, r):
        """The r highest-degree vertices (ties to the lower id), ascending."""
        if not 0 <= r <= self.n:
            raise InvalidCounts(f"r={r} outside [0, {self.n}]")
        return kernels.top_r_select(self._deg, r)

    def common_neighbors_outside(self, C, R):
        """Vertices outside R adjacent to every member of C, ascending."""
        C = np.asarray(sorted(set(int(x) for x in C)), dtype=np.int64)
        R = np.asarray(sorted(set(int(x) for x in R)), dtype=np.int64)
        if len(C) == 0:
            raise EmptyQuerySet()
        for arr in (C, R):
            if len(arr) and (arr[0] < 0 or arr[-1] >= self.n):
                raise VertexOutOfRange(int(arr[0] if arr[0] < 0 else arr[-1]), self.n)
        if not np.isin(C, R).all():
            raise InvalidCounts("query set must be contained in the excluded pool")
        acc = self._adj[C[0]].copy()
        for x in C[1:]:
            acc &= self._adj[x]
        acc &= ~kernels.make_mask(R, self._W)
        bits = np.unpackbits(acc.view(np.uint8), bitorder="little")
        return np.nonzero(bits[: self.n])[0].astype(np.int64)

    def delete_biclique_edges(self, left, right):
        """Delete all left x right edges; aborts untouched on a missing pair."""
        left = np.asarray(sorted(int(x) for x in left), dtype=np.int64)
        right = np.asarray(sorted(int(x) for x in right), dtype=np.int64)
        if np.intersect1d(left, right).size:
            raise InvalidCounts("sides of a biclique must be disjoint")
        self._delete_arrays(left, right)

    def _delete_arrays(self, left, right):
        missing = kernels.delete_biclique_general(self._adj, self._deg, left, right)
        if missing is not None:
            raise MissingEdge(*missing)
        self.m -= len(left) * len(right)

    def audit(self):
        """Consistency check; returns a list of problem strings (empty = ok)."""
        problems = []
        bits = np.unpackbits(self._adj.view(np.uint8), axis=1, bitorder="little")
        if bits[:, self.n :].any():
            problems.append("stray bits beyond vertex range")
        mat = bits[:, : self.n]
        if mat.trace() != 0:
            problems.append("self-loop bit set")
        if not np.array_equal(mat, mat.T):
            problems.append("adjacency not symmetric")
        deg = mat.sum(axis=1).astype(np.int64)
        if not np.array_equal(deg, self._deg):
            problems.append("stored degrees inconsistent with adjacency")
        if int(deg.sum()) != 2 * self.m:
            problems.append("edge count inconsistent with degree sum")
        return problems


class BipartiteGraph:
    """Two-sided graph; side A has size a, side B size b, with a >= b.

    Construction normalizes so the internal A side is the larger one and
    records whether the input orientation was swapped; original ids are
    recoverable through ``swapped``/``orig_a``/``orig_b``. Adjacency rows are
    indexed by internal B vertices with internal A vertices as bits.
    """

    __slots__ = ("a", "b", "orig_a", "orig_b", "swapped", "m", "_Wa", "_adj_b",
                 "_deg_b", "_deg_a")

    def __init__(self, orig_a, orig_b, adj_b, deg_b, deg_a, m):
        self.orig_a = orig_a
        self.orig_b = orig_b
        self.swapped = orig_a < orig_b
        self.a = max(orig_a, orig_b)
        self.b = min(orig_a, orig_b)
        self._Wa = adj_b.shape[1]
        self._adj_b = adj_b
        self._deg_b = deg_b
        self._deg_a = deg_a
        self.m = m

    @classmethod
    def from_edge_list(cls, a, b, edges):
        """Build from (A-vertex, B-vertex) pairs; per-side 0-based indices."""
        if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
            raise InvalidCounts(f"side sizes ({a!r}, {b!r}) invalid")
        pairs = np.array(edges, dtype=np.int64).reshape(-1, 2)
        u, v = pairs[:, 0].copy(), pairs[:, 1].copy()
        bad_u = (u < 0) | (u >= a)
        bad_v = (v < 0) | (v >= b)
        if bad_u.any() or bad_v.any():
            iu = int(np.argmax(bad_u)) if bad_u.any() else len(u)
            iv = int(np.argmax(bad_v)) if bad_v.any() else len(v)
            if iu <= iv:
                raise VertexOutOfRange(int(u[iu]), a)
            raise VertexOutOfRange(int(v[iv]), b)
        dup = _first_duplicate(u * np.int64(max(b, 1)) + v)
        if dup is not None:
            raise DuplicateEdge(int(u[dup]), int(v[dup]))
        return cls._from_arrays(a, b, u, v)

    @classmethod
    def _from_arrays(cls, a, b, u, v):
        """Trusted constructor; (u, v) in the original (A, B) orientation."""
        if a >= b:
            rows, cols, nb, na = v, u, b, a
        else:
            rows, cols, nb, na = u, v, a, b
        Wa = kernels.words_for(na)
        adj_b = np.zeros((nb, Wa), dtype=np.uint64)
        kernels.set_bits_bulk(adj_b, rows, cols)
        deg_b = np.bincount(rows, minlength=nb).astype(np.int64)
        deg_a = np.bincount(cols, minlength=na).astype(np.int64)
        return cls(a, b, adj_b, deg_b, deg_a, len(u))

    def copy(self):
        g = BipartiteGraph(self.orig_a, self.orig_b, self._adj_b.copy(),
                           self._deg_b.copy(), self._deg_a.copy(), self.m)
        return g

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.orig_a == other.orig_a
            and self.orig_b == other.orig_b
            and self.m == other.m
            and np.array_equal(self._adj_b, other._adj_b)
        )

    def adjacent_internal(self, b_id, a_id):
        return bool((int(self._adj_b[b_id, a_id >> 6]) >> (a_id & 63)) & 1)

    def has_edge(self, u, v):
        """Adjacency in the original (A-vertex u, B-vertex v) orientation."""
        if self.swapped:
            return self.adjacent_internal(u, v)
        return self.adjacent_internal(v, u)

    def degrees_b(self):
        return self._deg_b.copy()

    def degrees_a(self):
        return self._deg_a.copy()

    def top_degree_vertices_b(self, r):
        """The r highest-degree internal-B vertices, ascending ids."""
        if not 0 <= r <= self.b:
            raise InvalidCounts(f"r={r} outside [0, {self.b}]")
        return kernels.top_r_select(self._deg_b, r)

    def common_neighbors_of(self, C):
        """Internal-A vertices adjacent to every internal-B vertex in C."""
        C = np.asarray(sorted(set(int(x) for x in C)), dtype=np.int64)
        if len(C) == 0:
            raise EmptyQuerySet()
        if C[0] < 0 or C[-1] >= self.b:
            raise VertexOutOfRange(int(C[0] if C[0] < 0 else C[-1]), self.b)
        acc = self._adj_b[C[0]].copy()
        for x in C[1:]:
            acc &= self._adj_b[x]
        bits = np.unpackbits(acc.view(np.uint8), bitorder="little")
        return np.nonzero(bits[: self.a])[0].astype(np.int64)

    def edges_internal(self):
        """All edges as (internal-B, internal-A) arrays, ascending (b, a)."""
        return kernels.extract_edges_bipartite(self._adj_b, self.a)

    def edges_original(self):
        """All edges as (A-vertex, B-vertex) arrays in the original
        orientation, ascending (u, v)."""
        brow, acol = self.edges_internal()
        if self.swapped:
            return brow, acol
        order = np.lexsort((brow, acol))
        return acol[order], brow[order]

    def first_edge_internal(self):
        nz = np.nonzero(self._deg_b)[0]
        if len(nz) == 0:
            return None
        b_id = int(nz[0])
        row = self._adj_b[b_id]
        w = int(np.nonzero(row)[0][0])
        word = int(row[w])
        return b_id, (w << 6) + ((word & -word).bit_length() - 1)

    def delete_biclique_edges(self, left_b, right_a):
        """Delete all left x right edges (internal ids); aborts on missing."""
        left_b = np.asarray(sorted(int(x) for x in left_b), dtype=np.int64)
        right_a = np.asarray(sorted(int(x) for x in right_a), dtype=np.int64)
        self._delete_arrays(left_b, right_a)

    def _delete_arrays(self, left_b, right_a):
        missing = kernels.delete_biclique_bipartite(
            self._adj_b, self._deg_b, self._deg_a, left_b, right_a
        )
        if missing is not None:
            raise MissingEdge(*missing)
        self.m -= len(left_b) * len(right_a)

    def audit(self):
        problems = []
        bits = np.unpackbits(self._adj_b.view(np.uint8), axis=1, bitorder="little")
        if bits[:, self.a :].any():
            problems.append("stray bits beyond A-side range")
        mat = bits[:, : self.a]
        db = mat.sum(axis=1).astype(np.int64)
        da = mat.sum(axis=0).astype(np.int64)
        if not np.array_equal(db, self._deg_b):
            problems.append("stored B-side degrees inconsistent")
        if not np.array_equal(da, self._deg_a):
            problems.append("stored A-side degrees inconsistent")
        if int(db.sum()) != self.m or int(da.sum()) != self.m:
            problems.append("edge count inconsistent with degree sums")
        return problems
