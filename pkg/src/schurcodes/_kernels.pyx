# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: table-driven GF(q) row reduction, exhaustive
minimum-weight search, and componentwise row products.

All functions take the field's (q x q) add/mul tables and the length-q
neg/inv tables as int64 arrays; entries are canonical element encodings.
The pure-Python twin of this module is _kernels_py.
"""

import numpy as np


def rref(mat, add, mul, neg, inv):
    """Reduced row echelon form.  Returns (array, pivot column list)."""
    m = np.array(mat, dtype=np.int64, order="C", copy=True)
    if m.size == 0:
        return m, []
    cdef long long[:, ::1] a = m
    cdef const long long[:, ::1] addt = add
    cdef const long long[:, ::1] mult = mul
    cdef const long long[::1] negt = neg
    cdef const long long[::1] invt = inv
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef long long f, nf, tmp
    pivots = []
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        f = a[rank, col]
        if f != 1:
            f = invt[f]
            for j in range(col, ncols):
                a[rank, j] = mult[f, a[rank, j]]
        for r in range(nrows):
            if r != rank and a[r, col] != 0:
                nf = negt[a[r, col]]
                for j in range(col, ncols):
                    a[r, j] = addt[a[r, j], mult[nf, a[rank, j]]]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def min_weight(gen, add, mul, neg, long long stop_at):
    """Exact minimum weight over the row space of a full-rank generator.

    Enumerates one scalar-normalized message per projective class (first
    non-zero message digit fixed to 1), which preserves exactness since
    weights are invariant under scaling.  Stops early once a weight
    <= stop_at is seen.  Returns (weight, message digits).
    """
    g = np.ascontiguousarray(gen, dtype=np.int64)
    cdef const long long[:, ::1] G = g
    cdef const long long[:, ::1] addt = add
    cdef const long long[:, ::1] mult = mul
    cdef const long long[::1] negt = neg
    cdef Py_ssize_t k = G.shape[0], n = G.shape[1], q = addt.shape[0]
    cdef Py_ssize_t lead, i, c, j, pos, w
    cdef long long it, count

    # scaled[i, c, j] = c * G[i, j]; step[i, a, j] = scaled[i, (a+1) % q, j] - scaled[i, a, j]
    scaled_np = np.empty((k, q, n), dtype=np.int64)
    step_np = np.empty((k, q, n), dtype=np.int64)
    cdef long long[:, :, ::1] scaled = scaled_np
    cdef long long[:, :, ::1] step = step_np
    for i in range(k):
        for c in range(q):
            for j in range(n):
                scaled[i, c, j] = mult[c, G[i, j]]
    for i in range(k):
        for c in range(q):
            for j in range(n):
                step[i, c, j] = addt[scaled[i, (c + 1) % q, j], negt[scaled[i, c, j]]]

    best_msg_np = np.zeros(k, dtype=np.int64)
    digits_np = np.zeros(k, dtype=np.int64)
    cw_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] best_msg = best_msg_np
    cdef long long[::1] digits = digits_np
    cdef long long[::1] cw = cw_np
    cdef Py_ssize_t best = n + 1

    for lead in range(k):
        count = 1
        for i in range(lead + 1, k):
            count *= q
        for i in range(k):
            digits[i] = 0
        digits[lead] = 1
        for j in range(n):
            cw[j] = G[lead, j]
        for it in range(count):
            w = 0
            for j in range(n):
                if cw[j] != 0:
                    w += 1
            if w < best:
                best = w
                for i in range(k):
                    best_msg[i] = digits[i]
                if best <= stop_at:
                    return best, best_msg_np
            if it == count - 1:
                break
            pos = lead + 1
            while pos < k:
                c = digits[pos]
                for j in range(n):
                    cw[j] = addt[cw[j], step[pos, c, j]]
                c += 1
                if c == q:
                    c = 0
                digits[pos] = c
                if c != 0:
                    break
                pos += 1
    return best, best_msg_np


def row_products(a, b, mul):
    """All componentwise products of rows of a with rows of b."""
    A = np.ascontiguousarray(a, dtype=np.int64)
    B = np.ascontiguousarray(b, dtype=np.int64)
    cdef const long long[:, ::1] av = A
    cdef const long long[:, ::1] bv = B
    cdef const long long[:, ::1] mult = mul
    cdef Py_ssize_t ra = av.shape[0], rb = bv.shape[0], n = av.shape[1]
    out_np = np.empty((ra * rb, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_np
    cdef Py_ssize_t i, j, t
    for i in range(ra):
        for j in range(rb):
            for t in range(n):
                out[i * rb + j, t] = mult[av[i, t], bv[j, t]]
    return out_np
