"""Seeded random and exhaustive code generation.

Everything here is deterministic given the Random instance (or seed), which
is what makes search runs and the acceptance suites reproducible.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .code import LinearCode
from .errors import SearchExhaustedError
from .gf import GF, ProjPoint, all_points
from .linalg import MatrixGF
from .rs import rs_code


def random_vector(field: GF, n: int, rng: random.Random) -> np.ndarray:
    return np.array([rng.randrange(field.q) for _ in range(n)], dtype=np.int64)


def random_invertible_vector(field: GF, n: int, rng: random.Random) -> np.ndarray:
    return np.array([rng.randrange(1, field.q) for _ in range(n)], dtype=np.int64)


def random_code(
    field: GF, n: int, k: int, rng: random.Random, max_tries: int = 200
) -> LinearCode:
    """A uniformly sampled-ish [n, k] code (resamples until the span has
    dimension exactly k)."""
    if k == 0:
        return LinearCode.zero(field, n)
    for _ in range(max_tries):
        rows = [random_vector(field, n, rng) for _ in range(k)]
        c = LinearCode.from_rows(field, n, rows)
        if c.k == k:
            return c
    raise SearchExhaustedError(f"could not sample an [{n}, {k}] code over {field}")


def random_full_support_code(
    field: GF, n: int, k: int, rng: random.Random, max_tries: int = 200
) -> LinearCode:
    for _ in range(max_tries):
        c = random_code(field, n, k, rng, max_tries)
        if c.full_support():
            return c
    raise SearchExhaustedError(f"no full-support [{n}, {k}] code found over {field}")


def random_distance2_code(
    field: GF, n: int, k: int, rng: random.Random, max_tries: int = 500
) -> LinearCode:
    """Full-support code with no weight-1 word (d_min >= 2)."""
    e = np.zeros(n, dtype=np.int64)
    for _ in range(max_tries):
        c = random_full_support_code(field, n, k, rng, max_tries)
        clean = True
        for j in range(n):
            e[:] = 0
            e[j] = 1
            if c.contains(e):
                clean = False
                break
        if clean:
            return c
    raise SearchExhaustedError(f"no [{n}, {k}] code without weight-1 words over {field}")


def random_points(
    field: GF,
    n: int,
    rng: random.Random,
    allow_infinity: bool = True,
) -> List[ProjPoint]:
    pool = all_points(field) if allow_infinity else all_points(field)[:-1]
    if n > len(pool):
        raise ValueError(f"cannot pick {n} distinct points over {field}")
    return rng.sample(pool, n)


def random_rs_code(
    field: GF,
    n: int,
    k: int,
    rng: random.Random,
    alpha: Optional[List[ProjPoint]] = None,
) -> Tuple[LinearCode, np.ndarray, List[ProjPoint]]:
    if alpha is None:
        alpha = random_points(field, n, rng)
    g = random_invertible_vector(field, n, rng)
    return rs_code(field, g, alpha, k), g, alpha


def random_mds_code(
    field: GF, n: int, k: int, rng: random.Random, max_tries: int = 2000
) -> LinearCode:
    for _ in range(max_tries):
        c = random_code(field, n, k, rng)
        if c.is_mds():
            return c
    raise SearchExhaustedError(f"no MDS [{n}, {k}] code found over {field}")


def enumerate_codes(field: GF, n: int, k: int) -> Iterator[LinearCode]:
    """All [n, k] codes in a fixed order: pivot columns lexicographically,
    then free RREF entries lexicographically."""
    if k == 0:
        yield LinearCode.zero(field, n)
        return
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        free = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j not in pivots and j > pivots[i]
        ]
        base = np.zeros((k, n), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            m = base.copy()
            for (i, j), v in zip(free, values):
                m[i, j] = v
            yield LinearCode(field, n, MatrixGF(field, m))
