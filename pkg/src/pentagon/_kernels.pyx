# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for induced-cycle enumeration and edge-intersection.

Same contract as ``pentagon._fallback``; inputs are CSR arrays rather than
bitsets.
"""

import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector
from libc.stdint cimport int32_t, int64_t

cnp.import_array()


def induced_cycles(const int32_t[::1] indptr, const int32_t[::1] indices, int k,
                   int64_t limit=-1, bint count_only=False):
    """Return ``(cycles, count, complete)``.

    ``cycles`` is a ``(count, k)`` int32 array (empty when ``count_only``).
    With ``limit >= 0`` the search stops as soon as more than ``limit``
    cycles are found and ``complete`` is False.
    """
    cdef int n = indptr.shape[0] - 1
    cdef int last_pos = k - 1
    # blocked[w] counts path vertices at positions 1..tail-1 adjacent to w
    cdef int32_t[::1] blocked = np.zeros(max(n, 1), dtype=np.int32)
    cdef cnp.uint8_t[::1] adj0 = np.zeros(max(n, 1), dtype=np.uint8)
    cdef cnp.uint8_t[::1] used = np.zeros(max(n, 1), dtype=np.uint8)
    cdef int32_t[::1] path = np.zeros(k, dtype=np.int32)
    cdef int32_t[::1] cursor = np.zeros(k, dtype=np.int32)
    cdef vector[int32_t] out
    cdef int64_t found = 0
    cdef bint stopped = False
    cdef int v0, depth, w, tail, j, u, start, stop
    cdef bint ok

    for v0 in range(n):
        # need two neighbors above v0
        j = 0
        for u in range(indptr[v0], indptr[v0 + 1]):
            if indices[u] > v0:
                j += 1
        if j < 2:
            continue
        for u in range(indptr[v0], indptr[v0 + 1]):
            adj0[indices[u]] = 1
        path[0] = v0
        used[v0] = 1
        # depth d explores neighbors of path[d-1] for position d
        depth = 1
        cursor[1] = indptr[v0]
        while depth >= 1:
            tail = path[depth - 1]
            stop = indptr[tail + 1]
            ok = False
            while cursor[depth] < stop:
                w = indices[cursor[depth]]
                cursor[depth] += 1
                if w <= v0 or used[w] or blocked[w]:
                    continue
                if depth == last_pos:
                    if adj0[w] and path[1] < w:
                        found += 1
                        if not count_only:
                            for j in range(depth):
                                out.push_back(path[j])
                            out.push_back(w)
                        if limit >= 0 and found > limit:
                            stopped = True
                            break
                    continue
                if depth >= 2 and adj0[w]:
                    continue
                ok = True
                break
            if stopped:
                break
            if ok:
                # tail leaves the tail slot and starts blocking
                if depth >= 2:
                    for u in range(indptr[tail], indptr[tail + 1]):
                        blocked[indices[u]] += 1
                path[depth] = w
                used[w] = 1
                depth += 1
                cursor[depth] = indptr[w]
            else:
                # backtrack: undo the push that created this level
                depth -= 1
                if depth >= 1:
                    w = path[depth]
                    used[w] = 0
                    tail = path[depth - 1]
                    if depth >= 2:
                        for u in range(indptr[tail], indptr[tail + 1]):
                            blocked[indices[u]] -= 1
        used[v0] = 0
        for u in range(indptr[v0], indptr[v0 + 1]):
            adj0[indices[u]] = 0
        if stopped:
            break

    cdef Py_ssize_t total = out.size()
    arr = np.empty(total, dtype=np.int32)
    cdef int32_t[::1] view = arr
    cdef Py_ssize_t i
    for i in range(total):
        view[i] = out[i]
    return arr.reshape(-1, k), found, not stopped


def intersection_pairs(const int32_t[:, ::1] cycles, int n):
    """Cycle index pairs ``(a, b)``, ``a < b``, sharing an edge. May repeat."""
    cdef Py_ssize_t c = cycles.shape[0]
    cdef int k = cycles.shape[1] if c > 0 else 0
    if c == 0:
        return np.empty((0, 2), dtype=np.int32)
    cdef int64_t[::1] keys = np.empty(c * k, dtype=np.int64)
    cdef int32_t[::1] owner = np.empty(c * k, dtype=np.int32)
    cdef Py_ssize_t i, j, pos = 0, lo, hi, a, b
    cdef int64_t u, v, t
    for i in range(c):
        for j in range(k):
            u = cycles[i, j]
            v = cycles[i, (j + 1) % k]
            if u > v:
                t = u
                u = v
                v = t
            keys[pos] = u * n + v
            owner[pos] = <int32_t>i
            pos += 1
    order_arr = np.argsort(np.asarray(keys), kind="stable")
    cdef int64_t[::1] order = order_arr.astype(np.int64)
    cdef vector[int32_t] out
    lo = 0
    cdef Py_ssize_t m = c * k
    while lo < m:
        hi = lo + 1
        while hi < m and keys[order[hi]] == keys[order[lo]]:
            hi += 1
        for a in range(lo, hi):
            for b in range(a + 1, hi):
                i = owner[order[a]]
                j = owner[order[b]]
                if i < j:
                    out.push_back(<int32_t>i)
                    out.push_back(<int32_t>j)
                else:
                    out.push_back(<int32_t>j)
                    out.push_back(<int32_t>i)
        lo = hi
    arr = np.empty(out.size(), dtype=np.int32)
    cdef int32_t[::1] view = arr
    for i in range(<Py_ssize_t>out.size()):
        view[i] = out[i]
    return arr.reshape(-1, 2)
