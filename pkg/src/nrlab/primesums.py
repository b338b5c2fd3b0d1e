"""Prime-restricted sums: von Mangoldt, the additive-character prime indicator,
Mertens-type slices, and floor-weighted character sums over primes.

Integer-valued sums accumulate in exact integers; real-valued ones in
compensated doubles. The indicator rewrite is a verification target run by
literal root-of-unity summation, never an efficient algorithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import is_prime, legendre, primes_in
from .charsums import Kahan, KahanComplex, SumReport, burgess_delta, pick_auxiliary_prime, roots_of_unity

EULER_GAMMA = 0.5772156649015329

# Literal-summation cost cap for the indicator rewrite, in root lookups.
REWRITE_OPS_CAP = 10 ** 9


@dataclass
class PrimeSumParams:
    p: int | None = None
    x: float = 2.0
    z: float = 2.0
    N: int | None = None
    eps: float = 0.1
    delta: float | None = None

    def __post_init__(self):
        if self.p is not None:
            self.p = int(self.p)
        if self.delta is None:
            self.delta = burgess_delta(self.eps)

    def resolved_N(self) -> int:
        if self.N is None:
            self.N = pick_auxiliary_prime(self.x, self.delta)
        return self.N


@dataclass
class AsymptoticReport:
    """Exact value, predicted main term, and the claimed error scale."""

    lemma_id: str
    exact: float
    main_term: float
    predicted_error_scale: float
    params: PrimeSumParams | None = None
    terms: dict = field(default_factory=dict)

    @property
    def residual(self) -> float:
        return self.exact - self.main_term

    @property
    def normalized_residual(self) -> float:
        return self.residual / self.predicted_error_scale


def _iroot(n: int, k: int) -> int:
    """Largest r with r**k <= n."""
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = round(n ** (1.0 / k))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def von_mangoldt(n: int) -> float:
    """log q when n = q^k is a prime power (k >= 1), else 0."""
    if n < 2:
        return 0.0
    for k in range(1, n.bit_length()):
        r = _iroot(n, k)
        if r ** k == n and is_prime(r):
            return math.log(r)
    return 0.0


def prime_indicator(n: int, x: float, N: int) -> int:
    """Indicator of "n is one of the primes q <= x", via exact orthogonality.

    The inner additive-character sum over a < N is N when q = n (mod N) and 0
    otherwise, so with n, x < N it counts q = n exactly; n beyond x gives 0
    even when n is prime. The result is cross-checked against is_prime and
    both routes must agree.
    """
    if not is_prime(N):
        raise ValueError(f"N = {N} must be prime")
    if not 1 <= n < N:
        raise ValueError(f"need 1 <= n < N, got n={n}, N={N}")
    if x >= N:
        raise ValueError(f"need x < N so residues mod N are distinct, got x={x}, N={N}")
    hits = sum(1 for q in primes_in(2, math.floor(x)) if (q - n) % N == 0)
    direct = 1 if (n <= x and is_prime(n)) else 0
    if hits != direct:
        raise ArithmeticError(f"orthogonality route gave {hits}, is_prime gave {direct} at n={n}")
    return hits


def _floor_div(x: float, q: int) -> int:
    if float(x).is_integer():
        return int(x) // q
    return math.floor(x / q)


def _range_primes(z: float, x: float, primes=None) -> list[int]:
    if primes is not None:
        return [q for q in primes if z <= q <= x]
    return primes_in(max(2, math.ceil(z)), math.floor(x))


def floor_weight_prime_sum(params: PrimeSumParams, primes=None) -> AsymptoticReport:
    """Exact sum of [x/q] over primes z <= q <= x, vs its two-term main term."""
    x, z = params.x, params.z
    if not (2 <= z <= x):
        raise ValueError(f"need 2 <= z <= x, got z={z}, x={x}")
    exact = sum(_floor_div(x, q) for q in _range_primes(z, x, primes))
    lx, lz = math.log(x), math.log(z)
    main = x * math.log(lx / lz) - (1.0 - EULER_GAMMA) * (x / lx - z / lz)
    return AsymptoticReport("L1220.500", float(exact), main, x / lx ** 2, params,
                            terms={"exact_int": exact})


def mertens_slice(params: PrimeSumParams, primes=None) -> AsymptoticReport:
    """Exact sum of 1/q over primes z <= q <= x; main term log(log x / log z).

    With z = x^(1/e) the main term is exactly 1.
    """
    x, z = params.x, params.z
    if not (2 <= z <= x):
        raise ValueError(f"need 2 <= z <= x, got z={z}, x={x}")
    acc = Kahan()
    for q in _range_primes(z, x, primes):
        acc.add(1.0 / q)
    main = math.log(math.log(x) / math.log(z))
    return AsymptoticReport("E1234.515", acc.total, main, 1.0 / math.log(x) ** 2, params)


def frac_part_prime_sum(params: PrimeSumParams, primes=None) -> AsymptoticReport:
    """Exact sum of {x/q} over primes z <= q <= x, vs (1-gamma)(x/log x - z/log z)."""
    x, z = params.x, params.z
    if not (2 <= z <= x):
        raise ValueError(f"need 2 <= z <= x, got z={z}, x={x}")
    acc = Kahan()
    for q in _range_primes(z, x, primes):
        acc.add(x / q - _floor_div(x, q))
    lx, lz = math.log(x), math.log(z)
    main = (1.0 - EULER_GAMMA) * (x / lx - z / lz)
    return AsymptoticReport("E1234.520", acc.total, main, x / lx ** 2, params)


def _indicator_split(p: int, x: float, z: float, N: int) -> tuple[complex, complex]:
    """The two halves of the indicator rewrite of sum [x/q] chi(q).

    Computed by literal summation over roots of unity: first the prime phase
    sums P(a) = sum_q e^(2 pi i a q / N), then per n the averaged indicator
    I(n) = (1/N) sum_a e^(-2 pi i a n / N) P(a). Splitting [x/n] as
    x/n - {x/n} gives T0 = x sum chi(n)/n I(n), T1 = -sum {x/n} chi(n) I(n).
    """
    roots = roots_of_unity(N)
    qs = primes_in(2, math.floor(x))
    phase = []
    for a in range(N):
        acc = KahanComplex()
        for q in qs:
            acc.add(roots[(a * q) % N])
        phase.append(acc.total)
    t0 = KahanComplex()
    t1 = KahanComplex()
    for n in range(max(2, math.ceil(z)), math.floor(x) + 1):
        c = legendre(n, p)
        if not c:
            continue
        w = KahanComplex()
        for a in range(N):
            w.add(roots[(-a * n) % N] * phase[a])
        ind = w.total / N
        t0.add(c / n * ind)
        t1.add(-(x / n - _floor_div(x, n)) * c * ind)
    return complex(x) * t0.total, t1.total


def twisted_floor_prime_sum(
    params: PrimeSumParams,
    verify_rewrite: bool = True,
    ops_cap: int = REWRITE_OPS_CAP,
    primes=None,
) -> SumReport:
    """Exact sum of [x/q] chi(q) over primes z <= q <= x, bound x^(1-delta).

    With verify_rewrite the indicator-rewrite route is also evaluated and the
    two must agree to 1e-6; both are exact rearrangements of the same sum.
    """
    p, x, z = params.p, params.x, params.z
    if p is None:
        raise ValueError("twisted_floor_prime_sum needs the modulus p")
    if x >= p:
        raise ValueError(f"need x < p, got x={x}, p={p}")
    if z > x:
        qs = []
    else:
        qs = _range_primes(z, x, primes)
    direct = sum(_floor_div(x, q) * legendre(q, p) for q in qs)
    rep = SumReport("L5215.300", complex(direct), x ** (1.0 - params.delta), params)
    if verify_rewrite:
        N = params.resolved_N()
        if not is_prime(N):
            raise ValueError(f"N = {N} must be prime")
        if x >= N:
            raise ValueError(f"indicator rewrite needs x < N, got x={x}, N={N}")
        span = math.floor(x) - max(2, math.ceil(z)) + 1
        cost = (len(primes_in(2, math.floor(x))) + max(span, 0)) * N
        if cost > ops_cap:
            raise ValueError(f"rewrite cost {cost} exceeds cap {ops_cap}")
        t0, t1 = _indicator_split(p, x, z, N)
        gap = abs(direct - (t0 + t1))
        if gap > 1e-6:
            raise ArithmeticError(
                f"rewrite route disagrees with direct sum: {t0 + t1} vs {direct} (gap {gap:.3g})"
            )
        rep.extras.update(
            T0_re=t0.real, T0_im=t0.imag, T1_re=t1.real, T1_im=t1.imag, route_gap=gap
        )
    return rep


def prime_char_sum(params: PrimeSumParams, regime: str = "short", primes=None) -> SumReport:
    """Exact sum of chi(q) over primes q <= x.

    regime "short" claims x^(1-2 delta) (the x^(1-delta) variant is kept in
    extras, since both exponents circulate); regime "long" claims
    sqrt(p) log p.
    """
    p, x = params.p, params.x
    if p is None:
        raise ValueError("prime_char_sum needs the modulus p")
    if x >= p:
        raise ValueError(f"need x < p, got x={x}, p={p}")
    if regime not in ("short", "long"):
        raise ValueError(f"regime must be 'short' or 'long', got {regime!r}")
    qs = primes if primes is not None else primes_in(2, math.floor(x))
    exact = sum(legendre(q, p) for q in qs if q <= x)
    if regime == "long":
        return SumReport("T4015.300l", complex(exact), math.sqrt(p) * math.log(p), params)
    rep = SumReport("T4015.300s", complex(exact), x ** (1.0 - 2.0 * params.delta), params)
    rep.extras["bound_one_delta"] = x ** (1.0 - params.delta)
    return rep
