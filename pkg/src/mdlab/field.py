"""Finite fields GF(p) and GF(p^k) with a dense integer element encoding.

Elements are plain ints in [0, q). For k = 1 the code is the residue mod p.
For k > 1 the base-p digits (d0, ..., d_{k-1}) of the code are the
coefficients of 1, t, ..., t^{k-1}, where t is a root of the canonical
modulus: the lexicographically smallest monic irreducible polynomial of
degree k over GF(p), coefficient sequences compared from the constant term
up. Plain-int elements are hashable, orderable, and free to copy, which is
what the digraph and report layers rely on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterator

from . import caps
from .errors import CapExceeded, CompositeModulus, ZeroInverse

Coeffs = tuple[int, ...]


def _smallest_factor(n: int) -> int | None:
    """Smallest nontrivial divisor of n, or None when n is prime."""
    if n % 2 == 0:
        return 2 if n > 2 else None
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return None


def _check_prime(p: int) -> None:
    if p < 2:
        raise ValueError(f"characteristic must be >= 2, got {p}")
    if p > caps.MAX_PRIME:
        raise CapExceeded(f"characteristic {p} exceeds cap {caps.MAX_PRIME}")
    factor = _smallest_factor(p)
    if factor is not None:
        raise CompositeModulus(p, factor)


# --- GF(p)[t] helpers on raw coefficient tuples (ascending, trimmed) ---

def _trim(c: list[int]) -> Coeffs:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _mod_poly(a: Coeffs, m: Coeffs, p: int) -> Coeffs:
    """Remainder of a modulo m over GF(p); m must be nonzero."""
    r = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(r) - 1 >= dm and r:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - dm
        if c:
            for i, mc in enumerate(m):
                r[shift + i] = (r[shift + i] - c * mc) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _is_irreducible(f: Coeffs, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = (*tail, 1)
            if not _mod_poly(f, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> Coeffs:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    for tail in product(range(p), repeat=k):
        candidate = (*tail, 1)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldCtx:
    """Immutable finite-field context; all operations are pure."""

    p: int
    k: int
    q: int
    modulus: Coeffs | None  # monic, length k + 1; None for prime fields

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def element(self, value: int) -> int:
        """Canonicalize an int into an element code.

        Negative values are reduced mod p for prime fields only; extension
        fields require codes already in [0, q).
        """
        if self.k == 1:
            return value % self.p
        if 0 <= value < self.q:
            return value
        raise ValueError(f"element code {value} outside [0, {self.q})")

    def elements(self) -> range:
        if self.q > caps.MAX_ENUMERATION_ORDER:
            raise CapExceeded(
                f"enumeration of GF({self.q}) exceeds cap {caps.MAX_ENUMERATION_ORDER}")
        return range(self.q)

    # -- digit packing (k > 1) --

    def _digits(self, code: int) -> list[int]:
        p, d = self.p, []
        for _ in range(self.k):
            code, r = divmod(code, p)
            d.append(r)
        return d

    def _code(self, digits: list[int]) -> int:
        return reduce(lambda acc, d: acc * self.p + d, reversed(digits), 0)

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._code([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self._code([-x % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        assert self.modulus is not None
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * mod[j]
            prod[i] = 0
        return self._code([c % p for c in prod[:k]])

    def pow(self, a: int, e: int) -> int:
        """a**e with the 0**0 = 1 convention; e may exceed q."""
        if e < 0:
            raise ValueError("negative exponent")
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        e %= self.q - 1
        if e == 0:
            return 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in GF({self.q})")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def units(self) -> Iterator[int]:
        yield from range(1, self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.k == 1 else f"GF({self.p}^{self.k})"


def prime_field(p: int) -> FieldCtx:
    """GF(p) for prime p; raises CompositeModulus with a witness factor."""
    _check_prime(p)
    return FieldCtx(p=p, k=1, q=p, modulus=None)


def extension_field(p: int, k: int) -> FieldCtx:
    """GF(p^k) with the canonical (lex-smallest) irreducible modulus."""
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if k > caps.MAX_EXTENSION_DEGREE:
        raise CapExceeded(f"extension degree {k} exceeds cap {caps.MAX_EXTENSION_DEGREE}")
    _check_prime(p)
    if k == 1:
        return prime_field(p)
    q = p**k
    if q > caps.MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"field order {q} exceeds cap {caps.MAX_ENUMERATION_ORDER}")
    return FieldCtx(p=p, k=k, q=q, modulus=_smallest_irreducible(p, k))


def power_map_is_bijective(ctx: FieldCtx, m: int) -> bool:
    """Whether a -> a**m permutes the field: gcd(m, q - 1) == 1."""
    return math.gcd(m, ctx.q - 1) == 1
