"""Product bounds (Kneser, Product Singleton, refined Singleton) and the
PMDS pair classifier.

A pair (C, D) is Product-MDS when d_min(CD) = n - dim C - dim D + 2 >= 2.
Every such pair is either an MDS/Reed-Solomon configuration (product
distance > 2) or a twisted-dual block configuration (product distance = 2);
the classifier emits a certificate for the case at hand and every certificate
can be re-verified independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import linalg, rs
from .code import LinearCode, is_invertible_vector, vec_mul
from .errors import (
    InternalTheoremViolationError,
    NonInvertibleMultiplierError,
    NotFullSupportError,
    NotPmdsError,
    SchurCodesError,
    SearchExhaustedError,
    ZeroCodeError,
)
from .gf import GF, ProjPoint
from .linalg import MatrixGF
from .stab import projector_basis, stabilizer


@dataclass(frozen=True)
class BoundReport:
    name: str
    lhs: Union[int, Fraction]
    rhs: Union[int, Fraction]
    holds: bool
    context: dict

    def to_json(self) -> dict:
        def num(x):
            if isinstance(x, Fraction):
                return [x.numerator, x.denominator]
            return x

        return {
            "name": self.name,
            "lhs": num(self.lhs),
            "rhs": num(self.rhs),
            "holds": self.holds,
            "context": self.context,
        }


def singleton_check(c: LinearCode, budget=None) -> BoundReport:
    """Classical Singleton bound k + d <= n + 1."""
    d = c.min_distance(budget)
    return BoundReport(
        "singleton",
        c.k + d,
        c.n + 1,
        c.k + d <= c.n + 1,
        {"n": c.n, "k": c.k, "d": d},
    )


def kneser_check(c: LinearCode, d: LinearCode) -> BoundReport:
    """dim CD >= dim C + dim D - dim St(CD)."""
    if c.k == 0 or d.k == 0:
        raise ZeroCodeError("Kneser bound requires non-zero codes")
    cd = c.schur_product(d)
    st_dim = cd.n if cd.k == 0 else stabilizer(cd).dim
    lhs = cd.k
    rhs = c.k + d.k - st_dim
    return BoundReport(
        "kneser",
        lhs,
        rhs,
        lhs >= rhs,
        {"n": c.n, "dims": [c.k, d.k], "dim_product": cd.k, "dim_stabilizer": st_dim},
    )


def product_of(codes: Sequence[LinearCode]) -> LinearCode:
    out = codes[0]
    for c in codes[1:]:
        out = out.schur_product(c)
    return out


def psb_check(codes: Sequence[LinearCode], budget=None) -> BoundReport:
    """t-fold Product Singleton Bound for a full-support product:
    d_min(C_1 ... C_t) <= max(t - 1, n - sum(dims) + t)."""
    if len(codes) < 2:
        raise ValueError("need at least two codes")
    prod = product_of(codes)
    if not prod.full_support():
        raise NotFullSupportError("product does not have full support")
    t = len(codes)
    d = prod.min_distance(budget)
    rhs = max(t - 1, prod.n - sum(c.k for c in codes) + t)
    return BoundReport(
        "product_singleton",
        d,
        rhs,
        d <= rhs,
        {
            "n": prod.n,
            "t": t,
            "dims": [c.k for c in codes],
            "dim_product": prod.k,
            "d_product": d,
        },
    )


def is_pmds(c: LinearCode, d: LinearCode, budget=None) -> bool:
    """Equality in the Product Singleton Bound with d_min(CD) >= 2."""
    cd = c.schur_product(d)
    if cd.k == 0:
        raise ZeroCodeError("product is the zero code")
    dist = cd.min_distance(budget)
    return dist >= 2 and dist == c.n - c.k - d.k + 2


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class CaseRS:
    """PMDS case (i) with both dimensions >= 2: a common evaluation
    structure reconstructing both codes."""

    g_c: tuple
    g_d: tuple
    alpha: Tuple[ProjPoint, ...]

    case = "rs"

    def to_json(self) -> dict:
        return {
            "case": "rs",
            "g_c": list(self.g_c),
            "g_d": list(self.g_d),
            "alpha": [p.to_json() for p in self.alpha],
        }


@dataclass(frozen=True)
class CaseDimOne:
    """PMDS case (i) with a dimension-1 member; MDS-ness is the whole claim."""

    which: str  # "C" or "D"

    case = "dim1"

    def to_json(self) -> dict:
        return {"case": "dim1", "which": self.which}


@dataclass(frozen=True)
class DualBlock:
    support: Tuple[int, ...]
    c: LinearCode
    d: LinearCode
    g: tuple

    def to_json(self) -> dict:
        return {
            "support": list(self.support),
            "c": self.c.to_json(),
            "d": self.d.to_json(),
            "g": list(self.g),
        }


@dataclass(frozen=True)
class CaseDual:
    """PMDS case (ii): support-disjoint blocks with C_i = dual(g_i D_i)."""

    blocks: Tuple[DualBlock, ...]

    case = "dual"

    def to_json(self) -> dict:
        return {"case": "dual", "blocks": [b.to_json() for b in self.blocks]}


PmdsCertificate = Union[CaseRS, CaseDimOne, CaseDual]


def certificate_from_json(field: GF, doc: dict) -> PmdsCertificate:
    case = doc["case"]
    if case == "rs":
        return CaseRS(
            tuple(int(x) for x in doc["g_c"]),
            tuple(int(x) for x in doc["g_d"]),
            tuple(ProjPoint.from_json(field, p) for p in doc["alpha"]),
        )
    if case == "dim1":
        return CaseDimOne(doc["which"])
    if case == "dual":
        return CaseDual(
            tuple(
                DualBlock(
                    tuple(int(j) for j in b["support"]),
                    LinearCode.from_json(b["c"]),
                    LinearCode.from_json(b["d"]),
                    tuple(int(x) for x in b["g"]),
                )
                for b in doc["blocks"]
            )
        )
    raise ValueError(f"unknown certificate case {case!r}")


def _restrict(c: LinearCode, pi: np.ndarray, support: Sequence[int]) -> LinearCode:
    drop = [j for j in range(c.n) if j not in set(support)]
    return c.scale(pi).puncture(drop)


def classify_pmds(c: LinearCode, d: LinearCode, budget=None) -> PmdsCertificate:
    """Classify a PMDS pair per the structure theorem.

    d_min(CD) > 2 routes to case (i) (MDS everywhere; common evaluation
    structure when both dimensions exceed 1); d_min(CD) = 2 routes to
    case (ii) (stabilizer blocks with twisted duality).  Violations of
    guaranteed consequences raise InternalTheoremViolationError: they mean
    an implementation bug, not bad input.
    """
    if not is_pmds(c, d, budget):
        raise NotPmdsError("pair does not attain the Product Singleton Bound")
    cd = c.schur_product(d)
    if not cd.full_support():
        raise NotPmdsError(
            "product lacks full support; the pair is degenerate for classification"
        )
    dist = cd.min_distance(budget)
    st_dim = stabilizer(cd).dim
    if cd.k != c.k + d.k - st_dim:
        raise InternalTheoremViolationError("Kneser equality fails on a PMDS pair")

    if dist > 2:
        for name, code in (("CD", cd), ("C", c), ("D", d)):
            if not code.is_mds(budget):
                raise InternalTheoremViolationError(
                    f"{name} is not MDS although d_min(CD) > 2"
                )
        if c.k == 1:
            return CaseDimOne("C")
        if d.k == 1:
            return CaseDimOne("D")
        try:
            g_c, g_d, alpha = rs.recover_common_evaluation(c, d, budget)
        except SchurCodesError as e:
            raise InternalTheoremViolationError(
                f"common evaluation recovery failed: {e}"
            ) from e
        return CaseRS(tuple(int(x) for x in g_c), tuple(int(x) for x in g_d), tuple(alpha))

    pd = projector_basis(stabilizer(cd))
    blocks = []
    for pi, sup in zip(pd.projectors, pd.supports):
        ci = _restrict(c, pi, sup)
        di = _restrict(d, pi, sup)
        pi_cd = _restrict(cd, pi, sup)
        ni = len(sup)
        if pi_cd.k != ci.k + di.k - 1 or pi_cd.k != ni - 1:
            raise InternalTheoremViolationError("block dimensions violate case (ii)")
        if not pi_cd.is_mds(budget):
            raise InternalTheoremViolationError("block product is not MDS")
        dual_gen = pi_cd.dual()
        assert dual_gen.k == 1
        g_i = dual_gen.gen.data[0]  # RREF normalizes the leading entry to 1
        if not is_invertible_vector(g_i):
            raise InternalTheoremViolationError("block duality vector not invertible")
        if ci != di.scale(g_i).dual():
            raise InternalTheoremViolationError("block duality identity fails")
        blocks.append(DualBlock(tuple(sup), ci, di, tuple(int(x) for x in g_i)))
    return CaseDual(tuple(blocks))


def verify_certificate(cert: PmdsCertificate, c: LinearCode, d: LinearCode) -> bool:
    """Independent re-check of a certificate against the pair; never raises."""
    try:
        if isinstance(cert, CaseRS):
            field = c.field
            alpha = list(cert.alpha)
            return (
                rs.rs_code(field, list(cert.g_c), alpha, c.k) == c
                and rs.rs_code(field, list(cert.g_d), alpha, d.k) == d
            )
        if isinstance(cert, CaseDimOne):
            low, high = (c, d) if cert.which == "C" else (d, c)
            return low.k == 1 and low.is_mds() and high.is_mds()
        if isinstance(cert, CaseDual):
            seen = []
            c_parts, d_parts = [], []
            for b in cert.blocks:
                seen.extend(b.support)
                if not is_invertible_vector(np.array(b.g, dtype=np.int64)):
                    return False
                if b.c != b.d.scale(np.array(b.g, dtype=np.int64)).dual():
                    return False
                c_parts.append(_embed_rows(b.c, c.n, b.support))
                d_parts.append(_embed_rows(b.d, d.n, b.support))
            if sorted(seen) != list(range(c.n)):
                return False
            return (
                LinearCode.from_rows(c.field, c.n, np.vstack(c_parts)) == c
                and LinearCode.from_rows(d.field, d.n, np.vstack(d_parts)) == d
            )
        return False
    except Exception:
        return False


def _embed_rows(block: LinearCode, n: int, support: Sequence[int]) -> np.ndarray:
    out = np.zeros((block.k, n), dtype=np.int64)
    for i, j in enumerate(support):
        out[:, j] = block.gen.data[:, i]
    return out


# -- constructions ----------------------------------------------------------


def make_dual_pair(d: LinearCode, g: Sequence[int]) -> Tuple[LinearCode, LinearCode]:
    """(dual(gD), D): a PMDS pair with product distance 2 whenever the
    product is non-zero."""
    if not d.full_support():
        raise NotFullSupportError("D must have full support")
    g = np.asarray(g, dtype=np.int64)
    if not is_invertible_vector(g):
        raise NonInvertibleMultiplierError("multiplier has a zero entry")
    return d.scale(g).dual(), d


def make_selfdual(
    field: GF, nhalf: int, seed: int, max_tries: int = 400
) -> LinearCode:
    """A self-dual [2*nhalf, nhalf] code built as rowspace([I | A]) with
    A A^T = -I, found by seeded randomized search (rows are sampled one at a
    time inside the orthogonality constraint space)."""
    rng = random.Random(seed)
    q = field.q
    for _ in range(max_tries):
        rows: List[np.ndarray] = []
        ok = True
        for _i in range(nhalf):
            if rows:
                constraint = MatrixGF(field, np.array(rows, dtype=np.int64))
                space = linalg.kernel(constraint)
            else:
                space = MatrixGF.identity(field, nhalf)
            if space.nrows == 0:
                ok = False
                break
            found = None
            for _try in range(60 * q):
                coeffs = np.array(
                    [rng.randrange(q) for _ in range(space.nrows)], dtype=np.int64
                )
                x = linalg.vec_mat(coeffs, space)
                if int(_selfdot(field, x)) == field.neg(1):
                    found = x
                    break
            if found is None:
                ok = False
                break
            rows.append(found)
        if not ok:
            continue
        a = np.array(rows, dtype=np.int64)
        gen = np.hstack([np.eye(nhalf, dtype=np.int64), a])
        c = LinearCode(field, 2 * nhalf, MatrixGF(field, gen))
        if c == c.dual():
            return c
    raise SearchExhaustedError(
        f"no self-dual [{2 * nhalf}, {nhalf}] code found over {field} in {max_tries} tries"
    )


def _selfdot(field: GF, x: np.ndarray) -> int:
    acc = 0
    for v in vec_mul(field, x, x):
        acc = field.add(acc, int(v))
    return acc
