"""Pure-Python twin of the compiled kernels.

Vectorizes through the field's numpy lookup tables when they exist
(q <= TABLE_LIMIT) and falls back to scalar loops over the field's
arithmetic methods otherwise.  Results are bit-identical to _kernels.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 15


def rref(field, mat):
    m = np.array(mat, dtype=np.int64, order="C", copy=True)
    if m.size == 0:
        return m, []
    tables = field.kernel_tables()
    nrows, ncols = m.shape
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        if tables is not None:
            add_t, mul_t, neg_t, inv_t = tables
            f = m[rank, col]
            if f != 1:
                m[rank] = mul_t[inv_t[f], m[rank]]
            prow = m[rank]
            for r in range(nrows):
                if r != rank and m[r, col] != 0:
                    m[r] = add_t[m[r], mul_t[neg_t[m[r, col]], prow]]
        else:
            f = int(m[rank, col])
            if f != 1:
                fi = field.inv(f)
                for j in range(col, ncols):
                    m[rank, j] = field.mul(fi, int(m[rank, j]))
            for r in range(nrows):
                if r != rank and m[r, col] != 0:
                    nf = field.neg(int(m[r, col]))
                    for j in range(col, ncols):
                        m[r, j] = field.add(int(m[r, j]), field.mul(nf, int(m[rank, j])))
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def min_weight(field, gen, stop_at):
    """Projective-class exhaustive minimum weight; see _kernels.min_weight."""
    g = np.ascontiguousarray(gen, dtype=np.int64)
    tables = field.kernel_tables()
    if tables is None:
        return _min_weight_scalar(field, g, stop_at)
    add_t, mul_t, _, _ = tables
    k, n = g.shape
    q = field.q
    best = n + 1
    best_msg = np.zeros(k, dtype=np.int64)
    for lead in range(k):
        free = k - 1 - lead
        total = q**free
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            cw = np.broadcast_to(g[lead], (idx.size, n)).copy()
            for t in range(free):
                digits = (idx // q**t) % q
                cw = add_t[cw, mul_t[digits[:, None], g[lead + 1 + t][None, :]]]
            weights = np.count_nonzero(cw, axis=1)
            pos = int(np.argmin(weights))
            if weights[pos] < best:
                best = int(weights[pos])
                best_msg[:] = 0
                best_msg[lead] = 1
                f = int(idx[pos])
                for t in range(free):
                    best_msg[lead + 1 + t] = (f // q**t) % q
                if best <= stop_at:
                    return best, best_msg
    return best, best_msg


def _min_weight_scalar(field, g, stop_at):
    k, n = g.shape
    q = field.q
    best = n + 1
    best_msg = np.zeros(k, dtype=np.int64)
    digits = [0] * k
    for lead in range(k):
        for i in range(k):
            digits[i] = 0
        digits[lead] = 1
        cw = [int(x) for x in g[lead]]
        count = q ** (k - 1 - lead)
        for it in range(count):
            w = sum(1 for x in cw if x)
            if w < best:
                best = w
                best_msg[:] = digits
                if best <= stop_at:
                    return best, best_msg
            if it == count - 1:
                break
            pos = lead + 1
            while pos < k:
                c = digits[pos]
                # replace contribution c*row with (c+1 mod q)*row
                nc = c + 1 if c + 1 < q else 0
                for j in range(n):
                    delta = field.sub(
                        field.mul(nc, int(g[pos, j])), field.mul(c, int(g[pos, j]))
                    )
                    cw[j] = field.add(cw[j], delta)
                digits[pos] = nc
                if nc != 0:
                    break
                pos += 1
    return best, best_msg


def row_products(field, a, b):
    A = np.ascontiguousarray(a, dtype=np.int64)
    B = np.ascontiguousarray(b, dtype=np.int64)
    tables = field.kernel_tables()
    ra, n = A.shape
    rb = B.shape[0]
    if tables is not None:
        mul_t = tables[1]
        return mul_t[A[:, None, :], B[None, :, :]].reshape(ra * rb, n)
    out = np.empty((ra * rb, n), dtype=np.int64)
    for i in range(ra):
        for j in range(rb):
            for t in range(n):
                out[i * rb + j, t] = field.mul(int(A[i, t]), int(B[j, t]))
    return out
