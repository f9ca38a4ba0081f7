"""Stabilizer algebras St(C) = {x : xC contained in C} and code decomposition.

The stabilizer of a code is a unital subalgebra of F^n under componentwise
multiplication, so it has a unique basis of projectors (0/1 vectors) with
pairwise disjoint supports.  A full-support code splits into one
indecomposable block per projector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import linalg
from .code import LinearCode, vec_mul
from .errors import (
    NotAnAlgebraError,
    NotFullSupportError,
    NotUnitalError,
    ZeroCodeError,
)
from .gf import GF
from .linalg import MatrixGF


@dataclass(frozen=True)
class AlgebraBasis:
    """Canonical (RREF) basis of a subalgebra of F^n."""

    field: GF
    n: int
    basis: MatrixGF

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def contains(self, v) -> bool:
        return linalg.in_row_space(self.basis, v)


@dataclass(frozen=True)
class ProjectorDecomposition:
    """Disjoint-projector basis, with the induced blocks when decomposing a code.

    projectors[i] is a 0/1 vector with support supports[i]; the supports are
    pairwise disjoint and, for a full-support code, partition 0..n-1.
    blocks[i] is the component code living on F^{|supports[i]|} (None when
    the decomposition describes a bare algebra).
    """

    field: GF
    n: int
    projectors: Tuple[np.ndarray, ...]
    supports: Tuple[Tuple[int, ...], ...]
    blocks: Optional[Tuple[LinearCode, ...]] = None

    @property
    def h(self) -> int:
        return len(self.projectors)

    def to_json(self) -> dict:
        doc = {"projectors": [p.tolist() for p in self.projectors]}
        if self.blocks is not None:
            doc["blocks"] = [
                {"support": list(s), "code": b.to_json()}
                for s, b in zip(self.supports, self.blocks)
            ]
        return doc


def stabilizer(c: LinearCode) -> AlgebraBasis:
    """Basis of St(C), via the kernel of the stacked systems H diag(b) x^T = 0.

    H is a parity-check matrix of C and b runs over the generator rows: x
    stabilizes C iff every x*b lies in C iff H diag(b) x^T = 0 for all b.
    """
    if c.k == 0:
        raise ZeroCodeError("stabilizer of the zero code is the whole space")
    field = c.field
    h = c.dual().gen
    if h.nrows == 0:  # C = F^n, everything stabilizes
        basis = MatrixGF.identity(field, c.n)
        return AlgebraBasis(field, c.n, basis)
    systems = [linalg.scale_columns(h, c.gen.data[i]).data for i in range(c.k)]
    stacked = MatrixGF(field, np.vstack(systems))
    basis = linalg.kernel(stacked)
    out = AlgebraBasis(field, c.n, basis)
    _check_algebra(out, unital=True)
    return out


def _check_algebra(a: AlgebraBasis, unital: bool) -> None:
    one = np.ones(a.n, dtype=np.int64)
    if unital and not a.contains(one):
        raise NotUnitalError("algebra does not contain the all-one vector")
    rows = a.basis.data
    for i in range(a.dim):
        for j in range(i, a.dim):
            if not a.contains(vec_mul(a.field, rows[i], rows[j])):
                raise NotAnAlgebraError("basis is not closed under products")


def projector_basis(a: AlgebraBasis) -> ProjectorDecomposition:
    """The unique disjoint-projector basis of a unital subalgebra.

    Coordinates are grouped by equal columns of the RREF basis matrix; each
    class yields one indicator vector, which is membership-checked.
    """
    _check_algebra(a, unital=True)
    cols = {}
    for j in range(a.n):
        key = tuple(int(v) for v in a.basis.data[:, j])
        cols.setdefault(key, []).append(j)
    if any(not any(key) for key in cols):
        raise NotUnitalError("zero column: algebra misses a coordinate")
    supports = sorted(cols.values(), key=lambda s: s[0])
    projectors = []
    for s in supports:
        pi = np.zeros(a.n, dtype=np.int64)
        pi[s] = 1
        if not a.contains(pi):
            raise NotAnAlgebraError("coordinate-class indicator not in algebra")
        projectors.append(pi)
    if len(projectors) != a.dim:
        raise NotAnAlgebraError(
            f"{len(projectors)} projectors for dimension {a.dim}"
        )
    return ProjectorDecomposition(
        a.field,
        a.n,
        tuple(projectors),
        tuple(tuple(s) for s in supports),
    )


def decompose(c: LinearCode) -> ProjectorDecomposition:
    """Split a full-support code into its indecomposable blocks.

    Returns the projector basis of St(C) together with the blocks pi_i C
    projected onto their supports; the blocks reassemble to C exactly and
    each has full support and trivial stabilizer.
    """
    if c.k == 0:
        raise ZeroCodeError("cannot decompose the zero code")
    if not c.full_support():
        raise NotFullSupportError("decomposition requires full support")
    st = stabilizer(c)
    pd = projector_basis(st)
    blocks = []
    rebuilt = None
    for pi, sup in zip(pd.projectors, pd.supports):
        drop = [j for j in range(c.n) if j not in set(sup)]
        block = c.scale(pi).puncture(drop)
        if set(block.support()) != set(range(len(sup))):
            raise AssertionError("block does not have full support")
        if block.k > 0 and stabilizer(block).dim != 1:
            raise AssertionError("block is not indecomposable")
        blocks.append(block)
        embedded = _embed(block, c.n, sup)
        rebuilt = embedded if rebuilt is None else _sum_codes(rebuilt, embedded)
    if sum(b.k for b in blocks) != c.k or rebuilt != c:
        raise AssertionError("blocks do not reassemble the code")
    return ProjectorDecomposition(
        pd.field, pd.n, pd.projectors, pd.supports, tuple(blocks)
    )


def _embed(block: LinearCode, n: int, support: Tuple[int, ...]) -> LinearCode:
    g = np.zeros((block.k, n), dtype=np.int64)
    for i, j in enumerate(support):
        g[:, j] = block.gen.data[:, i]
    return LinearCode.from_rows(block.field, n, g)


def _sum_codes(a: LinearCode, b: LinearCode) -> LinearCode:
    return LinearCode.from_matrix(a.field, linalg.stack(a.gen, b.gen))


@dataclass(frozen=True)
class RefinedSingletonReport:
    """Both stabilizer-refined Singleton bounds for one code.

    bound1 (requires d > 1):      d <= n - k + 1 - (h - 1)
    bound2 (requires full support): d <= (n - k)/h + 1, compared exactly
    A bound that does not apply is reported as None.
    """

    n: int
    k: int
    d: int
    h: int
    bound1_holds: Optional[bool]
    bound2_holds: Optional[bool]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "h": self.h,
            "bound1_holds": self.bound1_holds,
            "bound2_holds": self.bound2_holds,
        }


def singleton_refined_check(c: LinearCode, budget=None) -> RefinedSingletonReport:
    d = c.min_distance(budget)
    h = stabilizer(c).dim
    bound1 = d <= c.n - c.k + 1 - (h - 1) if d > 1 else None
    bound2 = (
        Fraction(d) <= Fraction(c.n - c.k, h) + 1 if c.full_support() else None
    )
    return RefinedSingletonReport(c.n, c.k, d, h, bound1, bound2)
