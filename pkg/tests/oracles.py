"""Independent brute-force oracles used to freeze expected values.

Nothing here imports nrlab: every function is a from-scratch reference so
test expectations never share code paths with the implementation under test.
"""

import cmath
import math


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def trial_primes(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if trial_is_prime(n)]


def chi_euler(n: int, p: int) -> int:
    """Euler criterion, written directly against builtin pow."""
    r = pow(n, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def chi_by_squares(p: int) -> list[int]:
    """Character table from explicit square enumeration."""
    table = [-1] * p
    table[0] = 0
    for i in range(1, p):
        table[i * i % p] = 1
    return table


def linear_least_nonresidue(p: int) -> int:
    """Least nonresidue by a full linear search over every n, prime or not."""
    table = chi_by_squares(p)
    for n in range(2, p):
        if table[n] == -1:
            return n
    raise AssertionError(f"no nonresidue below {p}")


def direct_geometric_sum(N: int, t: int, x: float) -> complex:
    return sum(cmath.exp(2j * math.pi * n * t / N) for n in range(1, math.floor(x) + 1))


def direct_twisted_sum(p: int, x: float, weight, twist_k: int, N: int) -> complex:
    """Literal evaluation of sum w(n) chi(n) e^(2 pi i k n / N) for n <= x."""
    table = chi_by_squares(p)
    total = 0j
    for n in range(1, math.floor(x) + 1):
        total += table[n % p] * weight(n) * cmath.exp(2j * math.pi * twist_k * n / N)
    return total
