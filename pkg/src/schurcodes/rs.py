"""Generalized/extended Reed-Solomon (Cauchy) codes.

Construction from a multiplier vector g and pairwise-distinct evaluation
points in F union {inf}, recognition of RS structure, and constructive
recovery of (g, alpha) certificates.  Certificates are canonical only up to
projective reparametrization, so the contract everywhere is reconstruction
equality, never certificate equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .code import LinearCode, is_invertible_vector, vec_inv
from .errors import (
    AmbiguousSolutionSpaceError,
    DuplicateEvaluationPointError,
    FieldMismatchError,
    HypothesesUnmetError,
    LengthExceedsFieldError,
    LengthMismatchError,
    NonInvertibleMultiplierError,
    PatternViolationError,
    PreconditionViolatedError,
    RecoveryFailedError,
    RepeatedEvaluationPointError,
    ZeroCodeError,
)
from .gf import GF, ProjPoint, all_points
from .linalg import MatrixGF

DEFAULT_AMBIGUITY_BUDGET = 3


def vandermonde(field: GF, k: int, alpha: Sequence[ProjPoint]) -> MatrixGF:
    """k x n generalized Vandermonde matrix: column (1, a, ..., a^(k-1)) for a
    finite evaluation point, (0, ..., 0, 1) for infinity."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = len(alpha)
    m = np.zeros((k, n), dtype=np.int64)
    for j, pt in enumerate(alpha):
        if pt.field != field:
            raise FieldMismatchError("evaluation point from a different field")
        if pt.is_infinity:
            m[k - 1, j] = 1
        else:
            for i in range(k):
                m[i, j] = field.pow(pt.value, i)
    return MatrixGF(field, m)


def rs_code(field: GF, g: Sequence[int], alpha: Sequence[ProjPoint], k: int) -> LinearCode:
    """The Reed-Solomon code {g * (f(a_1), ..., f(a_n)) : deg f < k}."""
    g = np.asarray(g, dtype=np.int64)
    n = len(alpha)
    if g.shape != (n,):
        raise LengthMismatchError("multiplier length differs from point count")
    if not 1 <= k <= n:
        raise PreconditionViolatedError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > field.q + 1:
        raise LengthExceedsFieldError(f"n={n} exceeds q+1={field.q + 1}")
    if len({(p.value,) for p in alpha}) != n:
        raise RepeatedEvaluationPointError("evaluation points must be distinct")
    if not is_invertible_vector(g):
        raise NonInvertibleMultiplierError("multiplier has a zero entry")
    v = linalg.scale_columns(vandermonde(field, k, alpha), g)
    c = LinearCode.from_matrix(field, v)
    assert c.k == k
    return c


@dataclass(frozen=True)
class RsCertificate:
    """A verified (g, alpha) witness that a code is Reed-Solomon."""

    field: GF
    k: int
    g: tuple
    alpha: Tuple[ProjPoint, ...]

    def reconstruct(self) -> LinearCode:
        return rs_code(self.field, list(self.g), list(self.alpha), self.k)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "g": list(self.g),
            "alpha": [p.to_json() for p in self.alpha],
        }

    @staticmethod
    def from_json(field: GF, doc: dict) -> "RsCertificate":
        return RsCertificate(
            field,
            int(doc["k"]),
            tuple(int(x) for x in doc["g"]),
            tuple(ProjPoint.from_json(field, p) for p in doc["alpha"]),
        )


def _certificate(field, k, g, alpha, expected: LinearCode) -> RsCertificate:
    cert = RsCertificate(field, k, tuple(int(x) for x in g), tuple(alpha))
    if cert.reconstruct() != expected:
        raise RecoveryFailedError("certificate does not reconstruct the code")
    return cert


def rs_square_test(c: LinearCode) -> bool:
    """dim C^2 == 2 dim C - 1; characterizes RS among MDS codes of
    dimension at most (n-1)/2."""
    k, n = c.k, c.n
    if not (2 <= k and 2 * k + 1 <= n):
        raise PreconditionViolatedError(f"need 2 <= k <= (n-1)/2, got k={k}, n={n}")
    if not c.is_mds():
        raise PreconditionViolatedError("square test requires an MDS code")
    return c.schur_power(2).k == 2 * k - 1


def _has_weight_one_word(c: LinearCode) -> bool:
    e = np.zeros(c.n, dtype=np.int64)
    for j in sorted(c.support()):
        e[:] = 0
        e[j] = 1
        if c.contains(e):
            return True
    return False


def diagonal_equivalence(
    c: LinearCode,
    r: LinearCode,
    ambiguity_budget: int = DEFAULT_AMBIGUITY_BUDGET,
) -> Optional[np.ndarray]:
    """Invertible g with C = g R, or None.

    Candidates h with h C = R lie in the dual of W = C * dual(R); that dual
    is enumerated exhaustively in lexicographic coefficient order, so the
    outcome is deterministic and None is a sound rejection.
    """
    c._check_compatible(r)
    if c.k != r.k:
        raise PreconditionViolatedError("codes must have equal dimension")
    field = c.field
    w = c.schur_product(r.dual())
    wd = w.dual()
    s = wd.k
    if s > ambiguity_budget:
        raise AmbiguousSolutionSpaceError(
            f"candidate space has dimension {s} > {ambiguity_budget}"
        )
    if s == 0:
        return None
    for coeffs in itertools.product(range(field.q), repeat=s):
        if not any(coeffs):
            continue
        h = linalg.vec_mat(np.array(coeffs, dtype=np.int64), wd.gen)
        if not is_invertible_vector(h):
            continue
        if c.scale(h) == r:
            return vec_inv(field, h)
    return None


def _line_points(a: LinearCode) -> Tuple[np.ndarray, np.ndarray, List[ProjPoint]]:
    """Extract (r1, r2, alpha) from a 2-dimensional MDS code.

    Scans the q+1 projective classes of non-zero codewords and picks the two
    with the fewest zero entries (ties broken lexicographically), then reads
    alpha_j = r2_j / r1_j with infinity where r1_j = 0.
    """
    field = a.field
    cands = []
    for msg in [(1, c) for c in range(field.q)] + [(0, 1)]:
        w = linalg.vec_mat(np.array(msg, dtype=np.int64), a.gen)
        cands.append((int(np.count_nonzero(w == 0)), tuple(int(x) for x in w), w))
    cands.sort(key=lambda t: (t[0], t[1]))
    r1 = cands[0][2]
    r2 = cands[1][2]
    alpha = []
    for j in range(a.n):
        if r1[j] == 0:
            assert r2[j] != 0
            alpha.append(ProjPoint.infinity(field))
        else:
            alpha.append(ProjPoint.finite(field, field.div(int(r2[j]), int(r1[j]))))
    if len({p.value for p in alpha}) != a.n:
        raise AssertionError("2-dimensional MDS code produced repeated points")
    return r1, r2, alpha


def recover_with_line(a: LinearCode, c: LinearCode) -> Tuple[np.ndarray, List[ProjPoint]]:
    """Recover (g, alpha) for C from a 2-dimensional MDS code A with
    dim AC = dim C + 1 <= n - 1.

    A supplies the evaluation points; the multiplier then comes from a
    diagonal equivalence between C and the plain Vandermonde code.
    """
    a._check_compatible(c)
    if a.k != 2 or not a.is_mds():
        raise HypothesesUnmetError("A must be a 2-dimensional MDS code")
    if c.k == 0:
        raise ZeroCodeError("cannot recover the zero code")
    if not c.full_support():
        raise HypothesesUnmetError("C must have full support")
    if _has_weight_one_word(c):
        raise HypothesesUnmetError("C has a weight-1 word")
    ac = a.schur_product(c)
    if not (ac.k == c.k + 1 and ac.k <= c.n - 1):
        raise HypothesesUnmetError(
            f"need dim AC = dim C + 1 <= n - 1, got dim AC = {ac.k}"
        )
    _, _, alpha = _line_points(a)
    base = LinearCode.from_matrix(c.field, vandermonde(c.field, c.k, alpha))
    g = diagonal_equivalence(c, base)
    if g is None:
        raise RecoveryFailedError("no diagonal equivalence onto the Vandermonde code")
    if rs_code(c.field, g, alpha, c.k) != c:
        raise RecoveryFailedError("reconstruction mismatch")
    return g, alpha


def _column_point(field: GF, col: np.ndarray) -> Optional[ProjPoint]:
    """Evaluation point encoded by a non-zero Vandermonde-type column of
    height >= 2, or None if the column matches no point."""
    d = len(col)
    if col[0] == 0:
        if any(int(x) != 0 for x in col[:-1]) or col[-1] == 0:
            return None
        return ProjPoint.infinity(field)
    beta = field.div(int(col[1]), int(col[0]))
    for i in range(d):
        if int(col[i]) != field.mul(int(col[0]), field.pow(beta, i)):
            return None
    return ProjPoint.finite(field, beta)


def _column_matches(field: GF, col: np.ndarray, pt: ProjPoint) -> bool:
    d = len(col)
    if pt.is_infinity:
        return all(int(x) == 0 for x in col[:-1]) and col[-1] != 0
    if col[0] == 0:
        return False
    return all(
        int(col[i]) == field.mul(int(col[0]), field.pow(pt.value, i)) for i in range(d)
    )


def extend_evaluation(
    c: LinearCode,
    d: LinearCode,
    index_set: Sequence[int],
    g_i: Sequence[int],
    gd_i: Sequence[int],
    alpha_i: Sequence[ProjPoint],
) -> Tuple[np.ndarray, np.ndarray, List[ProjPoint]]:
    """Extend a joint RS structure from the coordinates in index_set to all of
    0..n-1.

    The generator matrices agreeing with g_I V_k(alpha_I) and
    gd_I V_l(alpha_I) on index_set are unique (projection there is injective
    on MDS codes); every remaining column must then follow a single
    geometric progression, which names its evaluation point.
    """
    c._check_compatible(d)
    field = c.field
    k, el, n = c.k, d.k, c.n
    idx = [int(j) for j in index_set]
    if len(set(idx)) != len(idx):
        raise ValueError("index set has repeats")
    if len(g_i) != len(idx) or len(gd_i) != len(idx) or len(alpha_i) != len(idx):
        raise LengthMismatchError("index set, multipliers and points must align")
    if max(k, el) < 2:
        raise HypothesesUnmetError("need dim C >= 2 or dim D >= 2")
    if not (c.is_mds() and d.is_mds()):
        raise HypothesesUnmetError("C and D must be MDS")
    cd = c.schur_product(d)
    if len(idx) < cd.k:
        raise HypothesesUnmetError("index set smaller than dim CD")

    gc_full = _basis_change(c, idx, g_i, alpha_i, k)
    gd_full = _basis_change(d, idx, gd_i, alpha_i, el)

    g = np.zeros(n, dtype=np.int64)
    gd = np.zeros(n, dtype=np.int64)
    alpha: List[Optional[ProjPoint]] = [None] * n
    for t, j in enumerate(idx):
        g[j] = int(g_i[t])
        gd[j] = int(gd_i[t])
        alpha[j] = alpha_i[t]
    decider, other, other_mat = (
        (gc_full, gd_full, "d") if k >= 2 else (gd_full, gc_full, "c")
    )
    for j in range(n):
        if alpha[j] is not None:
            continue
        pt = _column_point(field, decider.data[:, j])
        if pt is None or not _column_matches(field, other.data[:, j], pt):
            raise PatternViolationError(f"column {j} breaks the joint structure")
        alpha[j] = pt
        pi = gc_full.data[:, j]
        rho = gd_full.data[:, j]
        g[j] = int(pi[k - 1]) if pt.is_infinity and k >= 2 else int(pi[0])
        gd[j] = int(rho[el - 1]) if pt.is_infinity and el >= 2 else int(rho[0])

    if len({p.value for p in alpha}) != n:
        raise DuplicateEvaluationPointError("extension repeated an evaluation point")
    if rs_code(field, g, alpha, k) != c or rs_code(field, gd, alpha, el) != d:
        raise PatternViolationError("extended structure fails to reconstruct")
    return g, gd, list(alpha)


def _basis_change(code: LinearCode, idx, mult, alpha_i, dim) -> MatrixGF:
    """Unique generator matrix of the code whose idx-columns equal
    diag-scaled V_dim(alpha_I)."""
    field = code.field
    target = linalg.scale_columns(
        vandermonde(field, dim, list(alpha_i)), np.asarray(mult, dtype=np.int64)
    )
    proj = MatrixGF(field, code.gen.data[:, idx])
    rows = []
    for i in range(dim):
        x = linalg.solve(MatrixGF(field, proj.data.T), target.data[i])
        if x is None:
            raise PatternViolationError("punctured code is not the stated RS code")
        rows.append(x)
    m = MatrixGF(field, np.array(rows, dtype=np.int64))
    if linalg.rank(m) != dim:
        raise PatternViolationError("basis change is singular")
    return linalg.matmul(m, code.gen)


def recover_rs(c: LinearCode, budget: Optional[int] = None) -> Optional[RsCertificate]:
    """Decide whether C is Reed-Solomon and, if so, return a verified
    certificate.  None is returned only after an exhaustive rejection.

    Dispatch on k: trivial regimes (k = n, k = 1), the square test plus
    line recovery for 2 <= k <= (n-1)/2, the dual code for k >= (n+1)/2,
    and shorten-recurse-extend for k = n/2.
    """
    field, n, k = c.field, c.n, c.k
    if k == 0:
        raise ZeroCodeError("the zero code has no RS certificate")
    if n > field.q + 1:
        return None  # fewer than n distinct evaluation points exist
    if not c.is_mds(budget):
        return None
    points = all_points(field)
    if k == n:
        return _certificate(field, k, np.ones(n, dtype=np.int64), points[:n], c)
    if k == 1:
        return _certificate(field, k, c.gen.data[0], points[:n], c)
    if 2 * k + 1 <= n:
        if not rs_square_test(c):
            return None
        n0 = 2 * k + 1
        c0 = c.puncture(range(n0, n))
        a = c0.schur_power(2).dual()
        g0, alpha0 = recover_with_line(a, c0)
        g, _, alpha = extend_evaluation(c, c, list(range(n0)), g0, g0, alpha0)
        return _certificate(field, k, g, alpha, c)
    if 2 * k >= n + 1:
        sub = recover_rs(c.dual(), budget)
        if sub is None:
            return None
        alpha = list(sub.alpha)
        base = LinearCode.from_matrix(field, vandermonde(field, k, alpha))
        g = diagonal_equivalence(c, base)
        if g is None:
            raise RecoveryFailedError("dual certificate does not lift")
        return _certificate(field, k, g, alpha, c)
    # k = n/2: recurse on the shortened code, then try every extension point
    cs = c.shorten([n - 1])
    assert cs.k == k - 1
    sub = recover_rs(cs, budget)
    if sub is None:
        return None
    used = {p.value for p in sub.alpha}
    for cand in points:
        if cand.value in used:
            continue
        alpha = list(sub.alpha) + [cand]
        base = LinearCode.from_matrix(field, vandermonde(field, k, alpha))
        g = diagonal_equivalence(c, base)
        if g is not None:
            return _certificate(field, k, g, alpha, c)
    return None


def recover_common_evaluation(
    c: LinearCode, d: LinearCode, budget: Optional[int] = None
) -> Tuple[np.ndarray, np.ndarray, List[ProjPoint]]:
    """Common (g_C, g_D, alpha) for an MDS pair with
    dim CD = dim C + dim D - 1 <= n - 2 and both dimensions >= 2.

    The line A = dual(C0 D0) on the first dim CD + 2 coordinates fixes the
    evaluation points for both codes at once; extension completes them.
    """
    c._check_compatible(d)
    field, n, k, el = c.field, c.n, c.k, d.k
    if k < 2 or el < 2:
        raise HypothesesUnmetError("both dimensions must be >= 2")
    if not (c.is_mds(budget) and d.is_mds(budget)):
        raise HypothesesUnmetError("C and D must be MDS")
    cd = c.schur_product(d)
    if cd.k != k + el - 1 or cd.k > n - 2:
        raise HypothesesUnmetError(
            f"need dim CD = k + l - 1 <= n - 2, got {cd.k} with k={k}, l={el}"
        )
    n0 = k + el + 1
    tail = list(range(n0, n))
    c0 = c.puncture(tail)
    d0 = d.puncture(tail)
    a = c0.schur_product(d0).dual()
    if a.k != 2 or not a.is_mds():
        raise RecoveryFailedError("dual of the punctured product is not a line")
    gc0, alpha0 = recover_with_line(a, c0)
    gd0, alpha0d = recover_with_line(a, d0)
    assert [p.value for p in alpha0] == [p.value for p in alpha0d]
    return extend_evaluation(c, d, list(range(n0)), gc0, gd0, alpha0)
