"""Exact arithmetic in GF(p^m) for small q.

Elements are encoded as integers 0..q-1 via base-p packing of their
coordinates in the modulus basis: e = sum(c_i * p**i).  The encoding is the
wire format, so it must match across implementations bit-for-bit.

For q <= 256, multiplication/division/inversion go through log/antilog
tables built from a fixed generator; above that, arithmetic is done on the
fly on polynomial coordinates.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import (
    DivisionByZeroError,
    FieldMismatchError,
    NonPrimeError,
    ReducibleModulusError,
    UnsupportedFieldError,
)

# Largest q for which log/antilog and q*q kernel tables are built.
TABLE_LIMIT = 256

# Built-in moduli are searched for q up to this bound; larger extension
# fields require an explicit modulus.
BUILTIN_LIMIT = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as tuples (c_0, ..., c_deg)


def _poly_trim(c: Sequence[int]) -> tuple:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mod(a: Sequence[int], mod: Sequence[int], p: int) -> tuple:
    """Remainder of a modulo the monic polynomial mod, over GF(p)."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return _poly_trim([x % p for x in a[:dm]])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    m = len(mod) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for enc in range(p**d):
            div = [(enc // p**i) % p for i in range(d)] + [1]
            # long division remainder
            rem = list(mod)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i] % p
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * div[j]) % p
            if not _poly_trim(rem[:d]):
                return False
    return True


@functools.lru_cache(maxsize=None)
def builtin_modulus(p: int, m: int) -> tuple:
    """Smallest-encoding monic irreducible of degree m over GF(p).

    Candidates are ordered by the integer encoding of their low coefficients
    (c_0 + c_1 p + ...), which is the lexicographic order on
    (c_{m-1}, ..., c_0).
    """
    for enc in range(p**m):
        cand = tuple((enc // p**i) % p for i in range(m)) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


class GF:
    """A finite field GF(p^m) with canonical integer element encoding.

    Immutable after construction; instances may be shared freely across
    threads.  Two GF objects compare equal iff (p, m, modulus) agree.
    """

    def __init__(self, p: int, m: int = 1, modulus: Optional[Sequence[int]] = None):
        if p < 2 or not is_prime(p):
            raise NonPrimeError(f"{p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus is not None:
                raise ValueError("modulus is only meaningful for m > 1")
            self.modulus: Optional[tuple] = None
        else:
            if modulus is None:
                if self.q > BUILTIN_LIMIT:
                    raise UnsupportedFieldError(
                        f"no built-in modulus for GF({p}^{m}); supply one"
                    )
                modulus = builtin_modulus(p, m)
            modulus = tuple(int(c) % p for c in modulus[:-1]) + (int(modulus[-1]),)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not _poly_is_irreducible(modulus, p):
                raise ReducibleModulusError(
                    f"{list(modulus)} is reducible over GF({p})"
                )
            self.modulus = modulus
        self._exp: Optional[list] = None
        self._log: Optional[list] = None
        self._ktables = None
        if self.q <= TABLE_LIMIT:
            self._build_log_tables()

    # -- encoding ----------------------------------------------------------

    def coords(self, a: int) -> tuple:
        """Base-p coordinates of an encoding, lowest power first."""
        return tuple((a // self.p**i) % self.p for i in range(self.m))

    def encode(self, coords: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(coords))

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element encoding of {self}")
        return a

    # -- raw arithmetic on encodings ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coords(a), self.coords(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZeroError("0 has no inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e with the convention 0**0 = 1 (used by Vandermonde columns)."""
        if e < 0:
            raise ValueError("negative exponent; use inv() first")
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    # -- tables ------------------------------------------------------------

    def _mul_generic(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.coords(a), self.coords(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def _build_log_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            seen = 1
            x = g
            while x != 1:
                x = self._mul_generic(x, g)
                seen += 1
            if seen == q - 1:
                break
        else:
            if q != 2:  # GF(2): generator is 1
                raise AssertionError(f"no generator found for q={q}")
            g = 1
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_generic(x, g)
        self.generator = g
        self._exp = exp
        self._log = log

    def kernel_tables(self):
        """(add, mul, neg, inv) int64 lookup tables for the compute kernels.

        None when q > TABLE_LIMIT; callers then use the generic path.
        """
        if self.q > TABLE_LIMIT:
            return None
        if self._ktables is None:
            q = self.q
            add = np.empty((q, q), dtype=np.int64)
            mul = np.empty((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(q):
                    add[a, b] = self.add(a, b)
                    mul[a, b] = self.mul(a, b)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
            self._ktables = (add, mul, neg, inv)
        return self._ktables

    # -- conveniences -------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def to_json(self) -> dict:
        doc = {"p": self.p, "m": self.m}
        if self.modulus is not None:
            doc["modulus"] = list(self.modulus)
        return doc

    @staticmethod
    def from_json(doc: dict) -> "GF":
        return GF(int(doc["p"]), int(doc.get("m", 1)), doc.get("modulus"))


@dataclass(frozen=True)
class FieldElement:
    """A single field element; arithmetic rejects mixed fields."""

    field: GF
    value: int

    def _coerce(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other)}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b == 0:
            raise DivisionByZeroError("division by zero element")
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}@{self.field}"


class ProjPoint:
    """An evaluation point in F union {infinity}.

    Infinity compares equal only to infinity (of the same field).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: Optional[int]):
        if value is not None:
            field.check(value)
        self.field = field
        self.value = value  # None encodes infinity

    @staticmethod
    def finite(field: GF, value: int) -> "ProjPoint":
        return ProjPoint(field, value)

    @staticmethod
    def infinity(field: GF) -> "ProjPoint":
        return ProjPoint(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProjPoint)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def to_json(self) -> Union[int, str]:
        return "inf" if self.value is None else self.value

    @staticmethod
    def from_json(field: GF, doc: Union[int, str]) -> "ProjPoint":
        if doc == "inf":
            return ProjPoint.infinity(field)
        return ProjPoint.finite(field, int(doc))


def proj_points(field: GF, values: Iterable[Union[int, str, ProjPoint]]) -> list:
    """Build a point list from encodings, with "inf" for infinity."""
    out = []
    for v in values:
        if isinstance(v, ProjPoint):
            if v.field != field:
                raise FieldMismatchError("point from a different field")
            out.append(v)
        else:
            out.append(ProjPoint.from_json(field, v))
    return out


def all_points(field: GF) -> list:
    """All q+1 projective evaluation points, finite ones first."""
    pts = [ProjPoint.finite(field, v) for v in range(field.q)]
    pts.append(ProjPoint.infinity(field))
    return pts
