# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend; must stay bit-identical to pykern."""

import numpy as np

cimport numpy as cnp

ctypedef cnp.uint64_t u64
ctypedef cnp.int64_t i64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def set_bits_bulk(u64[:, ::1] words, i64[::1] rows, i64[::1] cols):
    cdef Py_ssize_t i, n = rows.shape[0]
    with nogil:
        for i in range(n):
            words[rows[i], cols[i] >> 6] |= (<u64>1) << (cols[i] & 63)


def top_r_select(i64[::1] degrees, Py_ssize_t r):
    cdef Py_ssize_t n = degrees.shape[0]
    if r == 0:
        return np.empty(0, dtype=np.int64)
    cdef i64 dmax = 0
    cdef Py_ssize_t i
    for i in range(n):
        if degrees[i] > dmax:
            dmax = degrees[i]
    counts_np = np.zeros(dmax + 2, dtype=np.int64)
    cdef i64[::1] start = counts_np
    cdef i64 d
    for i in range(n):
        start[degrees[i]] += 1
    # prefix offsets for descending degree, stable in ascending id
    cdef i64 acc = 0, c
    for d in range(dmax, -1, -1):
        c = start[d]
        start[d] = acc
        acc += c
    order_np = np.empty(n, dtype=np.int64)
    cdef i64[::1] order = order_np
    for i in range(n):
        d = degrees[i]
        order[start[d]] = i
        start[d] += 1
    out = order_np[:r].copy()
    out.sort()
    return out


def scan_lex_subsets(u64[:, ::1] words, i64[::1] cand, Py_ssize_t q,
                     u64[::1] forbid, Py_ssize_t first_lo, Py_ssize_t first_hi):
    cdef Py_ssize_t r = cand.shape[0]
    cdef Py_ssize_t W = words.shape[1]
    if q > r or q <= 0:
        return None, None, 0
    cdef Py_ssize_t hi = first_hi
    if hi > r - q + 1:
        hi = r - q + 1
    prefix_np = np.empty((q, W), dtype=np.uint64)
    idx_np = np.empty(q, dtype=np.int64)
    cdef u64[:, ::1] pf = prefix_np
    cdef i64[::1] idx = idx_np
    cdef long long scanned = 0
    cdef Py_ssize_t i0, level, w, k, pc
    cdef int found = 0
    cdef u64 word
    with nogil:
        for i0 in range(first_lo, hi):
            for w in range(W):
                pf[0, w] = words[cand[i0], w] & ~forbid[w]
            idx[0] = i0
            if q == 1:
                scanned += 1
                pc = 0
                for w in range(W):
                    pc += __builtin_popcountll(pf[0, w])
                if pc >= 1:
                    found = 1
                    break
                continue
            level = 1
            idx[1] = i0 + 1
            while True:
                if idx[level] > r - (q - level):
                    level -= 1
                    if level == 0:
                        break
                    idx[level] += 1
                    continue
                for w in range(W):
                    pf[level, w] = pf[level - 1, w] & words[cand[idx[level]], w]
                if level == q - 1:
                    scanned += 1
                    pc = 0
                    for w in range(W):
                        pc += __builtin_popcountll(pf[level, w])
                    if pc >= q:
                        found = 1
                        break
                    idx[level] += 1
                else:
                    level += 1
                    idx[level] = idx[level - 1] + 1
            if found:
                break
    if not found:
        return None, None, scanned
    c_out = np.empty(q, dtype=np.int64)
    d_out = np.empty(q, dtype=np.int64)
    cdef i64[::1] c_ids = c_out
    cdef i64[::1] d_ids = d_out
    for k in range(q):
        c_ids[k] = cand[idx[k]]
    k = 0
    for w in range(W):
        word = pf[q - 1, w]
        while word != 0 and k < q:
            d_ids[k] = (w << 6) + __builtin_ctzll(word)
            word &= word - 1
            k += 1
        if k == q:
            break
    return c_out, d_out, scanned


cdef inline int _has_bit(u64[:, ::1] words, i64 row, i64 col) nogil:
    return (words[row, col >> 6] >> (col & 63)) & 1


def delete_biclique_general(u64[:, ::1] words, i64[::1] degrees,
                            i64[::1] left, i64[::1] right):
    cdef Py_ssize_t p = left.shape[0], s = right.shape[0]
    cdef Py_ssize_t i, j
    cdef i64 bad_u = -1, bad_v = -1
    with nogil:
        for i in range(p):
            for j in range(s):
                if not _has_bit(words, left[i], right[j]):
                    bad_u = left[i]
                    bad_v = right[j]
                    break
            if bad_u >= 0:
                break
        if bad_u < 0:
            for i in range(p):
                for j in range(s):
                    words[left[i], right[j] >> 6] &= ~((<u64>1) << (right[j] & 63))
                    words[right[j], left[i] >> 6] &= ~((<u64>1) << (left[i] & 63))
            for i in range(p):
                degrees[left[i]] -= s
            for j in range(s):
                degrees[right[j]] -= p
    if bad_u >= 0:
        return int(bad_u), int(bad_v)
    return None


def delete_biclique_bipartite(u64[:, ::1] words_b, i64[::1] deg_b, i64[::1] deg_a,
                              i64[::1] left_b, i64[::1] right_a):
    cdef Py_ssize_t p = left_b.shape[0], s = right_a.shape[0]
    cdef Py_ssize_t i, j
    cdef i64 bad_b = -1, bad_a = -1
    with nogil:
        for i in range(p):
            for j in range(s):
                if not _has_bit(words_b, left_b[i], right_a[j]):
                    bad_b = left_b[i]
                    bad_a = right_a[j]
                    break
            if bad_b >= 0:
                break
        if bad_b < 0:
            for i in range(p):
                for j in range(s):
                    words_b[left_b[i], right_a[j] >> 6] &= ~((<u64>1) << (right_a[j] & 63))
            for i in range(p):
                deg_b[left_b[i]] -= s
            for j in range(s):
                deg_a[right_a[j]] -= p
    if bad_b >= 0:
        return int(bad_b), int(bad_a)
    return None


def extract_edges_general(u64[:, ::1] words, Py_ssize_t n):
    cdef Py_ssize_t W = words.shape[1]
    cdef Py_ssize_t u, w, lo_word
    cdef u64 word, lo_mask
    cdef long long m = 0
    with nogil:
        for u in range(n):
            lo_word = (u + 1) >> 6
            lo_mask = ~<u64>0 << ((u + 1) & 63)
            if ((u + 1) & 63) == 0:
                lo_mask = ~<u64>0
            for w in range(lo_word, W):
                word = words[u, w]
                if w == lo_word:
                    word &= lo_mask
                m += __builtin_popcountll(word)
    u_out = np.empty(m, dtype=np.int64)
    v_out = np.empty(m, dtype=np.int64)
    cdef i64[::1] us = u_out
    cdef i64[::1] vs = v_out
    cdef long long k = 0
    with nogil:
        for u in range(n):
            lo_word = (u + 1) >> 6
            lo_mask = ~<u64>0 << ((u + 1) & 63)
            if ((u + 1) & 63) == 0:
                lo_mask = ~<u64>0
            for w in range(lo_word, W):
                word = words[u, w]
                if w == lo_word:
                    word &= lo_mask
                while word != 0:
                    us[k] = u
                    vs[k] = (w << 6) + __builtin_ctzll(word)
                    word &= word - 1
                    k += 1
    return u_out, v_out


def extract_edges_bipartite(u64[:, ::1] words_b, Py_ssize_t ncols):
    cdef Py_ssize_t rows = words_b.shape[0], W = words_b.shape[1]
    cdef Py_ssize_t b, w
    cdef u64 word
    cdef long long m = 0
    with nogil:
        for b in range(rows):
            for w in range(W):
                m += __builtin_popcountll(words_b[b, w])
    b_out = np.empty(m, dtype=np.int64)
    a_out = np.empty(m, dtype=np.int64)
    cdef i64[::1] bs = b_out
    cdef i64[::1] as_ = a_out
    cdef long long k = 0
    with nogil:
        for b in range(rows):
            for w in range(W):
                word = words_b[b, w]
                while word != 0:
                    bs[k] = b
                    as_[k] = (w << 6) + __builtin_ctzll(word)
                    word &= word - 1
                    k += 1
    return b_out, a_out


def fisher_yates_partial(i64[::1] pool, i64[::1] js):
    cdef Py_ssize_t i, m = js.shape[0]
    cdef i64 j, tmp
    with nogil:
        for i in range(m):
            j = js[i]
            tmp = pool[i]
            pool[i] = pool[j]
            pool[j] = tmp
