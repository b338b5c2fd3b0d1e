"""Exact integer kernels: primality, prime ranges, modular power, quadratic character."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

# Miller-Rabin witnesses proven sufficient for all n < 3.3e24, which covers
# the full 64-bit range with room to spare.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Segment length for the segmented sieve; chosen to stay cache-resident.
SIEVE_SEGMENT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic primality test, total over n >= 0."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k > 2 and k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k


def _sieve_flags(limit: int) -> bytearray:
    """flags[i] == 1 iff i is prime, for 0 <= i <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            start = i * i
            flags[start :: i] = bytes(len(range(start, limit + 1, i)))
    return flags


# Base primes are reused across segmented runs; only grown, never shrunk.
_base_limit = 0
_base_primes: list[int] = []


def _base_up_to(limit: int) -> list[int]:
    global _base_limit, _base_primes
    if limit > _base_limit:
        grown = max(limit, 2 * _base_limit, 1 << 10)
        flags = _sieve_flags(grown)
        _base_primes = [i for i in range(2, grown + 1) if flags[i]]
        _base_limit = grown
    return _base_primes


def iter_primes(lo: int, hi: int, segment: int = SIEVE_SEGMENT) -> Iterator[int]:
    """Yield primes q with lo <= q <= hi in increasing order.

    Segmented: memory stays proportional to the segment length, so upper
    bounds around 1e9 are workable.
    """
    if hi < 2 or hi < lo:
        return
    lo = max(lo, 2)
    base = _base_up_to(math.isqrt(hi))
    for seg_lo in range(lo, hi + 1, segment):
        seg_hi = min(seg_lo + segment - 1, hi)
        flags = bytearray([1]) * (seg_hi - seg_lo + 1)
        for q in base:
            if q * q > seg_hi:
                break
            start = max(q * q, ((seg_lo + q - 1) // q) * q)
            if start > seg_hi:
                continue
            flags[start - seg_lo :: q] = bytes(len(range(start, seg_hi + 1, q)))
        for i, f in enumerate(flags):
            if f:
                yield seg_lo + i


def primes_in(lo: int, hi: int) -> list[int]:
    """The primes in [lo, hi], ascending."""
    if lo < 0 or hi < lo:
        if lo < 0:
            raise ValueError(f"prime range must satisfy 0 <= lo <= hi, got [{lo}, {hi}]")
    return list(iter_primes(lo, hi))


def pow_mod(b: int, e: int, m: int) -> int:
    """b**e mod m with the result in [0, m). Square-and-multiply via pow()."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if m < 1:
        raise ValueError("modulus must be positive")
    return pow(b, e, m)


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime modulus. Immutable, safe to share across threads."""

    p: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {self.p}")

    def __int__(self) -> int:
        return self.p

    def chi(self, n: int) -> int:
        return legendre(n, self.p)


def legendre(n: int, p: int | PrimeModulus) -> int:
    """Legendre symbol (n|p) in {-1, 0, +1} for an odd prime p.

    Reciprocity reduction only; no modular exponentiation. The Euler
    criterion lives in legendre_euler() and is kept as a test oracle.
    """
    p = int(p)
    a = n % p
    if a == 0:
        return 0
    sign = 1
    while a:
        while a & 1 == 0:
            a >>= 1
            if p & 7 in (3, 5):
                sign = -sign
        a, p = p, a
        if a & 3 == 3 and p & 3 == 3:
            sign = -sign
        a %= p
    return sign


def legendre_euler(n: int, p: int | PrimeModulus) -> int:
    """Quadratic character via Euler's criterion: n^((p-1)/2) mod p."""
    p = int(p)
    r = pow(n, (p - 1) // 2, p)
    if r == 0:
        return 0
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ValueError(f"{p} is not an odd prime")


def chi_table(p: int | PrimeModulus) -> list[int]:
    """chi(n) for 0 <= n < p, built by enumerating squares.

    Independent of legendre(): a second oracle, and the fast kernel for
    whole-period walks.
    """
    p = int(p)
    t = [-1] * p
    t[0] = 0
    for i in range(1, (p - 1) // 2 + 1):
        t[i * i % p] = 1
    return t
