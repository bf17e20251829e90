"""Univariate polynomials over a FieldCtx.

A polynomial is a tuple of element codes, index i holding the coefficient
of X^i, with trailing zeros trimmed; the zero polynomial is the empty
tuple. Two independent distinct-root counters are provided: exhaustive
evaluation (needs q small enough to enumerate) and deg gcd(f, X^q - X)
computed by modular exponentiation, which never materializes X^q and is
the fast path for very large prime fields.

Prime-field products use Kronecker substitution (coefficients packed into
slots of one big integer, multiplied once, unpacked mod p), so repeated
squaring stays cheap even for degree-hundreds operands. Reduction loops
touch only the nonzero modulus coefficients, which makes reduction by a
trinomial O(1) per degree step.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import caps
from .errors import (
    BothZero,
    CapExceeded,
    DegreeTooSmall,
    MethodDisagreement,
    ZeroModulus,
    ZeroPolynomial,
)
from .field import FieldCtx

Poly = tuple[int, ...]

X: Poly = (0, 1)
ONE: Poly = (1,)
ZERO: Poly = ()


def normalize(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def make_poly(ctx: FieldCtx, coeffs) -> Poly:
    """Build a polynomial from raw ints (reduced through ctx.element)."""
    return normalize(ctx.element(c) for c in coeffs)


def degree(f: Poly) -> int | None:
    """Degree of f, or None for the zero polynomial."""
    return len(f) - 1 if f else None


def eval_at(ctx: FieldCtx, f: Poly, x: int) -> int:
    """Horner evaluation of f at x."""
    if ctx.k == 1:
        p, acc = ctx.p, 0
        for c in reversed(f):
            acc = (acc * x + c) % p
        return acc
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def add(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ctx.add(out[i], c)
    return normalize(out)


def sub(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    return add(ctx, f, tuple(ctx.neg(c) for c in g))


def scale(ctx: FieldCtx, f: Poly, c: int) -> Poly:
    if c == 0:
        return ZERO
    return normalize(ctx.mul(a, c) for a in f)


def _mul_kronecker(f: Poly, g: Poly, p: int) -> Poly:
    # pack coefficients into slots wide enough that convolution sums never
    # carry across slot boundaries
    bound = (p - 1) * (p - 1) * min(len(f), len(g))
    w = bound.bit_length()
    fi = 0
    for c in reversed(f):
        fi = (fi << w) | c
    gi = 0
    for c in reversed(g):
        gi = (gi << w) | c
    prod = fi * gi
    mask = (1 << w) - 1
    out = []
    for _ in range(len(f) + len(g) - 1):
        out.append((prod & mask) % p)
        prod >>= w
    return normalize(out)


def mul(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    if ctx.k == 1:
        return _mul_kronecker(f, g, ctx.p)
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return normalize(out)


def monic(ctx: FieldCtx, f: Poly) -> Poly:
    if not f:
        return ZERO
    lead = f[-1]
    return f if lead == 1 else scale(ctx, f, ctx.inv(lead))


def poly_mod(ctx: FieldCtx, f: Poly, m: Poly) -> Poly:
    """Remainder of f modulo m (m nonzero)."""
    if not m:
        raise ZeroModulus("reduction modulo the zero polynomial")
    dm = len(m) - 1
    if dm == 0:
        return ZERO
    inv_lead = ctx.inv(m[-1])
    support = [(i, m[i]) for i in range(dm) if m[i] != 0]
    r = list(f)
    for top in range(len(r) - 1, dm - 1, -1):
        c = r[top]
        if c:
            c = ctx.mul(c, inv_lead)
            shift = top - dm
            for i, mc in support:
                r[shift + i] = ctx.sub(r[shift + i], ctx.mul(c, mc))
        r[top] = 0
    return normalize(r)


def poly_gcd(ctx: FieldCtx, f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    while g:
        f, g = g, poly_mod(ctx, f, g)
    return monic(ctx, f)


def poly_powmod(ctx: FieldCtx, base: Poly, e: int, modulus: Poly) -> Poly:
    """base**e reduced modulo modulus, by repeated squaring."""
    if not modulus:
        raise ZeroModulus("powmod modulo the zero polynomial")
    if len(modulus) - 1 < 1:
        raise ValueError("powmod modulus must have degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    result = poly_mod(ctx, ONE, modulus)
    base = poly_mod(ctx, base, modulus)
    while e:
        if e & 1:
            result = poly_mod(ctx, mul(ctx, result, base), modulus)
        e >>= 1
        if e:
            base = poly_mod(ctx, mul(ctx, base, base), modulus)
    return result


def trinomial(ctx: FieldCtx, d: int, a: int, b: int) -> Poly:
    """X^d + aX + b; a and b may be negative ints for prime fields."""
    if d < 2:
        raise DegreeTooSmall(f"trinomial degree must be >= 2, got {d}")
    coeffs = [0] * (d + 1)
    coeffs[0] = ctx.element(b)
    coeffs[1] = ctx.element(a)
    coeffs[d] = 1
    return normalize(coeffs)


@dataclass(frozen=True)
class RootCount:
    """Distinct-root count; the sorted roots tuple is present only when the
    count came from exhaustive enumeration."""

    distinct: int
    roots: Poly | None


def _roots_bruteforce(ctx: FieldCtx, f: Poly) -> RootCount:
    roots = tuple(x for x in ctx.elements() if eval_at(ctx, f, x) == 0)
    return RootCount(distinct=len(roots), roots=roots)


def _roots_gcd(ctx: FieldCtx, f: Poly) -> RootCount:
    if len(f) == 1:
        return RootCount(distinct=0, roots=None)
    # gcd(f, X^q - X) = product of (X - r) over the distinct roots r of f
    xq = poly_powmod(ctx, X, ctx.q, f)
    g = poly_gcd(ctx, f, sub(ctx, xq, X))
    return RootCount(distinct=len(g) - 1, roots=None)


def distinct_root_count(ctx: FieldCtx, f: Poly, method: str = "auto") -> RootCount:
    """Count distinct roots of f in GF(q).

    method: "bruteforce" (exhaustive evaluation, returns the roots),
    "gcd" (deg gcd(f, X^q - X), enumeration-free), "both" (runs both and
    insists they agree), or "auto" (both when q is small enough, gcd
    otherwise).
    """
    if not f:
        raise ZeroPolynomial("root count of the zero polynomial")
    if method == "auto":
        method = "both" if ctx.q <= caps.MAX_BOTH_METHOD_ORDER else "gcd"
    if method == "bruteforce":
        if ctx.q > caps.MAX_ENUMERATION_ORDER:
            raise CapExceeded(f"bruteforce over GF({ctx.q}) exceeds enumeration cap")
        return _roots_bruteforce(ctx, f)
    if method == "gcd":
        return _roots_gcd(ctx, f)
    if method == "both":
        by_eval = _roots_bruteforce(ctx, f)
        by_gcd = _roots_gcd(ctx, f)
        if by_eval.distinct != by_gcd.distinct:
            raise MethodDisagreement(
                f"bruteforce found {by_eval.distinct} distinct roots, gcd {by_gcd.distinct}")
        return by_eval
    raise ValueError(f"unknown method {method!r}")


def nontrivial_root_count(ctx: FieldCtx, n: int, method: str = "auto") -> int:
    """Distinct roots of X^(n+1) - 2X + 1 other than the root 1.

    The coefficients sum to zero in every field, so 1 is always a root and
    the subtraction below never goes negative.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    minus_two = ctx.neg(ctx.add(1, 1))
    f = trinomial(ctx, n + 1, minus_two, 1)
    return distinct_root_count(ctx, f, method=method).distinct - 1
