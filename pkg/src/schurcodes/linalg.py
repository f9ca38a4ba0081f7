"""Exact dense linear algebra over GF(q).

Matrices are immutable wrappers around int64 arrays of element encodings.
Every subspace has one canonical basis: the non-zero rows of its RREF;
equality of subspaces is equality of those matrices.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from . import backend
from .errors import FieldMismatchError, LengthMismatchError
from .gf import GF


def _as_array(field: GF, rows, ncols: Optional[int] = None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, ncols or 0)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array of encodings")
    if a.size and (a.min() < 0 or a.max() >= field.q):
        raise ValueError(f"entries must be encodings in [0, {field.q})")
    return np.ascontiguousarray(a)


class MatrixGF:
    """An exact r x n matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: GF, data):
        self.field = field
        arr = _as_array(field, data)
        arr.setflags(write=False)
        self.data = arr

    @staticmethod
    def from_rows(field: GF, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "MatrixGF":
        if len(rows) == 0:
            if ncols is None:
                raise ValueError("ncols required for an empty row list")
            m = MatrixGF.__new__(MatrixGF)
            m.field = field
            arr = np.zeros((0, ncols), dtype=np.int64)
            arr.setflags(write=False)
            m.data = arr
            return m
        lens = {len(r) for r in rows}
        if len(lens) != 1:
            raise LengthMismatchError("rows have differing lengths")
        if ncols is not None and lens != {ncols}:
            raise LengthMismatchError(f"rows have length {lens.pop()}, expected {ncols}")
        return MatrixGF(field, rows)

    @staticmethod
    def identity(field: GF, n: int) -> "MatrixGF":
        return MatrixGF(field, np.eye(n, dtype=np.int64))

    @staticmethod
    def zeros(field: GF, r: int, n: int) -> "MatrixGF":
        return MatrixGF(field, np.zeros((r, n), dtype=np.int64))

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def to_lists(self):
        return self.data.tolist()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field}, {self.to_lists()})"


def _check_same_field(a: MatrixGF, b: MatrixGF) -> None:
    if a.field != b.field:
        raise FieldMismatchError("matrices over different fields")


def rref(m: MatrixGF):
    """Unique reduced row echelon form: (R, rank, pivot columns)."""
    arr, pivots = backend.rref(m.field, m.data)
    return MatrixGF(m.field, arr), len(pivots), pivots


def row_basis(m: MatrixGF) -> MatrixGF:
    """Canonical basis of the row space: non-zero RREF rows."""
    arr, pivots = backend.rref(m.field, m.data)
    return MatrixGF(m.field, arr[: len(pivots)])


def rank(m: MatrixGF) -> int:
    return len(backend.rref(m.field, m.data)[1])


def kernel(m: MatrixGF) -> MatrixGF:
    """Canonical (RREF) basis of {x : M x^T = 0}; (n - rank) rows."""
    field = m.field
    n = m.ncols
    arr, pivots = backend.rref(field, m.data)
    r = len(pivots)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    if not free:
        return MatrixGF.zeros(field, 0, n)
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for j, pcol in enumerate(pivots):
            basis[i, pcol] = field.neg(int(arr[j, f]))
    return row_basis(MatrixGF(field, basis))


def stack(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    _check_same_field(a, b)
    if a.ncols != b.ncols:
        raise LengthMismatchError("column counts differ")
    return MatrixGF(a.field, np.vstack([a.data, b.data]))


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Exact matrix product over the field."""
    _check_same_field(a, b)
    if a.ncols != b.nrows:
        raise LengthMismatchError("inner dimensions differ")
    field = a.field
    tables = field.kernel_tables()
    out = np.zeros((a.nrows, b.ncols), dtype=np.int64)
    if tables is not None:
        add_t, mul_t = tables[0], tables[1]
        for t in range(a.ncols):
            out = add_t[out, mul_t[a.data[:, t][:, None], b.data[t][None, :]]]
    else:
        for i in range(a.nrows):
            for j in range(b.ncols):
                acc = 0
                for t in range(a.ncols):
                    acc = field.add(acc, field.mul(int(a.data[i, t]), int(b.data[t, j])))
                out[i, j] = acc
    return MatrixGF(field, out)


def mat_vec(a: MatrixGF, v: np.ndarray) -> np.ndarray:
    return matmul(a, MatrixGF(a.field, np.asarray(v, dtype=np.int64).reshape(-1, 1))).data[:, 0]


def vec_mat(v: np.ndarray, a: MatrixGF) -> np.ndarray:
    return matmul(MatrixGF(a.field, np.asarray(v, dtype=np.int64).reshape(1, -1)), a).data[0]


def scale_columns(m: MatrixGF, g: Sequence[int]) -> MatrixGF:
    """Multiply column j by g[j] (i.e. M @ diag(g))."""
    field = m.field
    g = np.asarray(g, dtype=np.int64)
    if g.shape != (m.ncols,):
        raise LengthMismatchError("scaling vector length differs from ncols")
    tables = field.kernel_tables()
    if tables is not None:
        return MatrixGF(field, tables[1][m.data, g[None, :]])
    out = m.data.copy()
    for i in range(m.nrows):
        for j in range(m.ncols):
            out[i, j] = field.mul(int(out[i, j]), int(g[j]))
    return MatrixGF(field, out)


def row_space_intersect(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Canonical basis of rowspace(A) intersected with rowspace(B).

    Kernel method on stacked generators: left-kernel vectors (u, w) of
    [A; B] give intersection elements u A = -w B.
    """
    _check_same_field(a, b)
    if a.ncols != b.ncols:
        raise LengthMismatchError("ambient lengths differ")
    field = a.field
    n = a.ncols
    ra = row_basis(a)
    rb = row_basis(b)
    if ra.nrows == 0 or rb.nrows == 0:
        return MatrixGF.zeros(field, 0, n)
    stacked = np.vstack([ra.data, rb.data])
    left_kernel = kernel(MatrixGF(field, stacked.T))
    if left_kernel.nrows == 0:
        return MatrixGF.zeros(field, 0, n)
    u = MatrixGF(field, left_kernel.data[:, : ra.nrows])
    return row_basis(matmul(u, ra))


def solve(a: MatrixGF, b: Sequence[int]) -> Optional[np.ndarray]:
    """One solution x of A x^T = b^T, free variables set to 0; None if none."""
    field = a.field
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (a.nrows,):
        raise LengthMismatchError("right-hand side length differs from nrows")
    aug = np.hstack([a.data, b.reshape(-1, 1)])
    arr, pivots = backend.rref(field, aug)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = np.zeros(a.ncols, dtype=np.int64)
    for j, pcol in enumerate(pivots):
        x[pcol] = arr[j, a.ncols]
    return x


def in_row_space(m: MatrixGF, v: Sequence[int]) -> bool:
    v = np.asarray(v, dtype=np.int64)
    base = row_basis(m)
    if base.nrows == 0:
        return not v.any()
    return rank(stack(base, MatrixGF(m.field, v.reshape(1, -1)))) == base.nrows
