"""Pure-Python kernel backend.

Implements the same contract as the compiled backend (see kernels/__init__.py)
using numpy bulk operations and Python big-int bitsets. Used as the fallback
when the extension is unavailable, and as the semantic reference in the
backend-equivalence tests.
"""

from itertools import combinations

import numpy as np

_ONE = np.uint64(1)
_SIX3 = np.uint64(63)


def set_bits_bulk(words, rows, cols):
    """Set bit ``cols[i]`` in ``words[rows[i]]`` for all i."""
    if len(rows) == 0:
        return
    widx = (cols >> 6).astype(np.intp)
    bit = _ONE << (cols & 63).astype(np.uint64)
    np.bitwise_or.at(words, (rows.astype(np.intp), widx), bit)


def top_r_select(degrees, r):
    """Ids of the r vertices with highest degree (ties to the lower id),
    returned sorted ascending by id."""
    if r == 0:
        return np.empty(0, dtype=np.int64)
    n = len(degrees)
    order = np.lexsort((np.arange(n), -degrees))
    return np.sort(order[:r]).astype(np.int64)


def _row_int(words, row):
    return int.from_bytes(words[row].tobytes(), "little")


def scan_lex_subsets(words, cand, q, forbid, first_lo, first_hi):
    """Scan q-subsets of ``cand`` (ascending row ids) in lexicographic order.

    For each subset C the candidate set is the bitwise AND of the rows of C
    with the ``forbid`` mask cleared. Returns ``(c_ids, d_ids, scanned)`` for
    the first subset whose candidate set has at least q bits, where ``d_ids``
    are the q lowest set bit positions; ``(None, None, scanned)`` otherwise.
    Only subsets whose first position index lies in [first_lo, first_hi) are
    visited; ``scanned`` counts visited subsets, including the successful one.
    """
    r = len(cand)
    if q > r or q <= 0:
        return None, None, 0
    forbid_int = int.from_bytes(np.asarray(forbid, dtype=np.uint64).tobytes(), "little")
    rows = {}
    for v in cand:
        rows[int(v)] = _row_int(words, int(v))
    scanned = 0
    hi = min(first_hi, r - q + 1)
    for i0 in range(first_lo, hi):
        base = rows[int(cand[i0])] & ~forbid_int
        if q == 1:
            scanned += 1
            if base.bit_count() >= 1:
                return (
                    np.array([cand[i0]], dtype=np.int64),
                    np.array(_first_bits(base, 1), dtype=np.int64),
                    scanned,
                )
            continue
        for rest in combinations(range(i0 + 1, r), q - 1):
            d = base
            for j in rest:
                d &= rows[int(cand[j])]
            scanned += 1
            if d.bit_count() >= q:
                c_ids = np.array([cand[i0]] + [cand[j] for j in rest], dtype=np.int64)
                return c_ids, np.array(_first_bits(d, q), dtype=np.int64), scanned
    return None, None, scanned


def _first_bits(x, k):
    out = []
    while len(out) < k:
        lsb = x & -x
        out.append(lsb.bit_length() - 1)
        x ^= lsb
    return out


def _pairs_present(words, left, right):
    """0/1 matrix of adjacency bits for left x right; shape (|left|, |right|)."""
    widx = (right >> 6).astype(np.intp)
    shift = (right & 63).astype(np.uint64)
    block = words[left.astype(np.intp)][:, widx]
    return (block >> shift[None, :]) & _ONE


def _clear_bits(words, rows, cols):
    widx = (cols >> 6).astype(np.intp)
    mask = ~(_ONE << (cols & 63).astype(np.uint64))
    np.bitwise_and.at(words, (rows.astype(np.intp), widx), mask)


def delete_biclique_general(words, degrees, left, right):
    """Remove all left x right edges from a symmetric adjacency; returns the
    first missing pair (left-major order) without mutating, or None."""
    present = _pairs_present(words, left, right)
    if not present.all():
        i, j = np.argwhere(present == 0)[0]
        return int(left[i]), int(right[j])
    p, s = len(left), len(right)
    _clear_bits(words, np.repeat(left, s), np.tile(right, p))
    _clear_bits(words, np.repeat(right, p), np.tile(left, s))
    degrees[left] -= s
    degrees[right] -= p
    return None


def delete_biclique_bipartite(words_b, deg_b, deg_a, left_b, right_a):
    """Bipartite variant: rows are B-side vertices, bits are A-side vertices."""
    present = _pairs_present(words_b, left_b, right_a)
    if not present.all():
        i, j = np.argwhere(present == 0)[0]
        return int(left_b[i]), int(right_a[j])
    p, s = len(left_b), len(right_a)
    _clear_bits(words_b, np.repeat(left_b, s), np.tile(right_a, p))
    deg_b[left_b] -= s
    deg_a[right_a] -= p
    return None


def _unpack(words, ncols):
    return np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")[:, :ncols]


def extract_edges_general(words, n):
    """All edges as (u, v) arrays with u < v, ascending (u, v)."""
    bits = np.triu(_unpack(words, n), 1)
    u, v = np.nonzero(bits)
    return u.astype(np.int64), v.astype(np.int64)


def extract_edges_bipartite(words_b, ncols):
    """All edges as (b_row, a_col) arrays, ascending (b, a)."""
    b, a = np.nonzero(_unpack(words_b, ncols))
    return b.astype(np.int64), a.astype(np.int64)


def fisher_yates_partial(pool, js):
    """Apply swaps pool[i] <-> pool[js[i]] in order (partial Fisher-Yates)."""
    for i in range(len(js)):
        j = js[i]
        pool[i], pool[j] = pool[j], pool[i]
