"""Linear codes over GF(q): Schur products, duals, distances, MDS tests.

A code is stored as its canonical RREF generator matrix with zero rows
dropped, so code equality is matrix equality.  Minimum distances are exact,
computed by exhaustive message enumeration (one representative per
projective class); anything that would exceed the enumeration budget raises
BudgetExceededError instead of approximating.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Optional, Sequence

import numpy as np

from . import backend, linalg
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    IndexOutOfRangeError,
    LengthMismatchError,
    ZeroCodeError,
)
from .gf import GF
from .linalg import MatrixGF

DEFAULT_BUDGET = 1 << 26


def _budget(budget: Optional[int]) -> int:
    return DEFAULT_BUDGET if budget is None else budget


class LinearCode:
    """A linear [n, k] code with canonical RREF generator matrix."""

    __slots__ = ("field", "n", "gen")

    def __init__(self, field: GF, n: int, gen: MatrixGF):
        # trusted constructor: gen must already be canonical
        self.field = field
        self.n = n
        self.gen = gen

    @staticmethod
    def from_rows(field: GF, n: int, rows: Sequence[Sequence[int]]) -> "LinearCode":
        """Canonical code spanned by the given rows (zero rows dropped)."""
        for r in rows:
            if len(r) != n:
                raise LengthMismatchError(f"row of length {len(r)}, expected {n}")
        m = MatrixGF.from_rows(field, rows, ncols=n)
        return LinearCode(field, n, linalg.row_basis(m))

    @staticmethod
    def from_matrix(field: GF, m: MatrixGF) -> "LinearCode":
        return LinearCode(field, m.ncols, linalg.row_basis(m))

    @staticmethod
    def zero(field: GF, n: int) -> "LinearCode":
        return LinearCode(field, n, MatrixGF.zeros(field, 0, n))

    @staticmethod
    def full(field: GF, n: int) -> "LinearCode":
        return LinearCode(field, n, MatrixGF.identity(field, n))

    @property
    def k(self) -> int:
        return self.gen.nrows

    def is_zero(self) -> bool:
        return self.k == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen == other.gen
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.gen))

    def __repr__(self) -> str:
        return f"LinearCode({self.field}, n={self.n}, k={self.k})"

    def _check_compatible(self, other: "LinearCode") -> None:
        if self.field != other.field:
            raise FieldMismatchError("codes over different fields")
        if self.n != other.n:
            raise LengthMismatchError(f"lengths differ: {self.n} vs {other.n}")

    def contains(self, v: Sequence[int]) -> bool:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.n,):
            raise LengthMismatchError("vector length differs from code length")
        return linalg.in_row_space(self.gen, v)

    def codewords(self, budget: Optional[int] = None) -> Iterable[np.ndarray]:
        """All q^k codewords (budget-guarded); intended for small codes."""
        limit = _budget(budget)
        if self.field.q**self.k > limit:
            raise BudgetExceededError(self.field.q**self.k, limit)
        if self.k == 0:
            yield np.zeros(self.n, dtype=np.int64)
            return
        for msg in itertools.product(range(self.field.q), repeat=self.k):
            yield linalg.vec_mat(np.array(msg, dtype=np.int64), self.gen)

    # -- products ------------------------------------------------------------

    def schur_product(self, other: "LinearCode") -> "LinearCode":
        """Span of all componentwise products of codewords (basis suffices)."""
        self._check_compatible(other)
        if self.k == 0 or other.k == 0:
            return LinearCode.zero(self.field, self.n)
        prods = backend.row_products(self.field, self.gen.data, other.gen.data)
        return LinearCode.from_matrix(self.field, MatrixGF(self.field, prods))

    def schur_power(self, t: int) -> "LinearCode":
        if t < 1:
            raise ValueError(f"power must be >= 1, got {t}")
        out = self
        for _ in range(t - 1):
            out = out.schur_product(self)
        return out

    # -- parameters ------------------------------------------------------------

    def min_distance(self, budget: Optional[int] = None) -> int:
        """Exact minimum weight by exhaustive message enumeration."""
        if self.k == 0:
            raise ZeroCodeError("minimum distance of the zero code is undefined")
        limit = _budget(budget)
        if self.field.q**self.k > limit:
            raise BudgetExceededError(self.field.q**self.k, limit)
        w, _ = backend.min_weight(self.field, self.gen.data, stop_at=1)
        return int(w)

    def support(self) -> frozenset:
        cols = np.flatnonzero(self.gen.data.any(axis=0)) if self.k else []
        return frozenset(int(j) for j in cols)

    def full_support(self) -> bool:
        return len(self.support()) == self.n

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, linalg.kernel(self.gen))

    # -- derived codes ---------------------------------------------------------

    def _check_cols(self, cols: Iterable[int]) -> list:
        cols = sorted(set(int(j) for j in cols))
        if cols and (cols[0] < 0 or cols[-1] >= self.n):
            raise IndexOutOfRangeError(f"column set outside 0..{self.n - 1}")
        return cols

    def puncture(self, cols: Iterable[int]) -> "LinearCode":
        """Delete the given coordinates."""
        drop = self._check_cols(cols)
        keep = [j for j in range(self.n) if j not in set(drop)]
        sub = MatrixGF(self.field, self.gen.data[:, keep]) if self.k else MatrixGF.zeros(self.field, 0, len(keep))
        return LinearCode.from_matrix(self.field, sub)

    def shorten(self, cols: Iterable[int]) -> "LinearCode":
        """Restrict to codewords vanishing on cols, then delete cols."""
        drop = self._check_cols(cols)
        if not drop:
            return self
        keep = [j for j in range(self.n) if j not in set(drop)]
        axes = np.zeros((len(keep), self.n), dtype=np.int64)
        for i, j in enumerate(keep):
            axes[i, j] = 1
        sub = linalg.row_space_intersect(self.gen, MatrixGF(self.field, axes))
        return LinearCode.from_matrix(self.field, MatrixGF(self.field, sub.data[:, keep] if sub.nrows else np.zeros((0, len(keep)), dtype=np.int64)))

    def scale(self, g: Sequence[int]) -> "LinearCode":
        """The code {g*c : c in C}; dimension is preserved iff g is invertible."""
        g = np.asarray(g, dtype=np.int64)
        if g.shape != (self.n,):
            raise LengthMismatchError("multiplier length differs from code length")
        return LinearCode.from_matrix(self.field, linalg.scale_columns(self.gen, g))

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        """Place the two codes on disjoint coordinate blocks."""
        if self.field != other.field:
            raise FieldMismatchError("codes over different fields")
        n = self.n + other.n
        g = np.zeros((self.k + other.k, n), dtype=np.int64)
        if self.k:
            g[: self.k, : self.n] = self.gen.data
        if other.k:
            g[self.k :, self.n :] = other.gen.data
        # block-diagonal stack of RREFs is already RREF
        return LinearCode(self.field, n, MatrixGF(self.field, g))

    # -- MDS ---------------------------------------------------------------------

    def is_mds(self, budget: Optional[int] = None) -> bool:
        """d = n - k + 1, by distance enumeration or by the all-information-sets
        criterion when the message space is too large; the routes agree."""
        if self.k == 0:
            raise ZeroCodeError("MDS is undefined for the zero code")
        limit = _budget(budget)
        if self.field.q**self.k <= limit:
            w, _ = backend.min_weight(
                self.field, self.gen.data, stop_at=self.n - self.k
            )
            return int(w) == self.n - self.k + 1
        if math.comb(self.n, self.k) <= limit:
            for cols in itertools.combinations(range(self.n), self.k):
                sub = MatrixGF(self.field, self.gen.data[:, cols])
                if linalg.rank(sub) != self.k:
                    return False
            return True
        raise BudgetExceededError(self.field.q**self.k, limit)

    def systematic_generator(self, info_set: Iterable[int]) -> Optional[MatrixGF]:
        """Generator matrix equal to the identity on the columns of info_set
        (in sorted order), or None when those columns are dependent."""
        cols = sorted(set(int(j) for j in info_set))
        if len(cols) != self.k:
            raise ValueError(f"information set must have size k={self.k}")
        if cols[0] < 0 or cols[-1] >= self.n:
            raise IndexOutOfRangeError("information set outside 0..n-1")
        sub = self.gen.data[:, cols]
        aug = np.hstack([sub, np.eye(self.k, dtype=np.int64)])
        arr, pivots = backend.rref(self.field, aug)
        if len(pivots) < self.k or pivots[self.k - 1] >= self.k:
            return None
        t_inv = MatrixGF(self.field, arr[:, self.k :])
        return linalg.matmul(t_inv, self.gen)

    def min_weight_word(self, budget: Optional[int] = None) -> np.ndarray:
        """A codeword of minimum weight, scaled so its first non-zero entry is 1."""
        if self.k == 0:
            raise ZeroCodeError("the zero code has no non-zero word")
        limit = _budget(budget)
        if self.field.q**self.k > limit:
            raise BudgetExceededError(self.field.q**self.k, limit)
        _, msg = backend.min_weight(self.field, self.gen.data, stop_at=1)
        x = linalg.vec_mat(msg, self.gen)
        j0 = int(np.flatnonzero(x)[0])
        if x[j0] != 1:
            inv = self.field.inv(int(x[j0]))
            x = np.array([self.field.mul(inv, int(v)) for v in x], dtype=np.int64)
        return x

    def min_weight_systematic(self, budget: Optional[int] = None) -> MatrixGF:
        """A systematic generator matrix whose first row has minimum weight.

        Exists for every code: the zero positions of a minimum-weight word,
        together with its leading position, contain an information set.
        """
        x = self.min_weight_word(budget)
        j0 = int(np.flatnonzero(x)[0])
        chosen = [j0]
        r = 1
        for j in range(self.n):
            if r == self.k:
                break
            if x[j] != 0 or j == j0:
                continue
            cand = chosen + [j]
            if linalg.rank(MatrixGF(self.field, self.gen.data[:, cand])) > r:
                chosen.append(j)
                r += 1
        if r < self.k:
            raise AssertionError("minimum-weight word admits no information set")
        info = sorted(chosen)
        g = self.systematic_generator(info)
        assert g is not None
        i0 = info.index(j0)
        order = [i0] + [i for i in range(self.k) if i != i0]
        out = MatrixGF(self.field, g.data[order])
        assert np.array_equal(out.data[0], x)
        return out

    # -- serialization -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "generators": self.gen.to_lists(),
        }

    @staticmethod
    def from_json(doc: dict) -> "LinearCode":
        field = GF.from_json(doc["field"])
        n = int(doc["n"])
        return LinearCode.from_rows(field, n, doc["generators"])


def vec_mul(field: GF, u: Sequence[int], v: Sequence[int]) -> np.ndarray:
    """Componentwise product of two vectors of encodings."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape:
        raise LengthMismatchError("vector lengths differ")
    tables = field.kernel_tables()
    if tables is not None:
        return tables[1][u, v]
    return np.array([field.mul(int(a), int(b)) for a, b in zip(u, v)], dtype=np.int64)


def vec_inv(field: GF, g: Sequence[int]) -> np.ndarray:
    """Componentwise inverse of an invertible vector."""
    g = np.asarray(g, dtype=np.int64)
    return np.array([field.inv(int(a)) for a in g], dtype=np.int64)


def is_invertible_vector(g: np.ndarray) -> bool:
    return bool(np.all(np.asarray(g) != 0))
