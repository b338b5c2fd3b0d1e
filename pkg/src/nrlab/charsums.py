"""Interval character sums, twisted and weighted, against their claimed bounds.

Every asymptotic claim is reported as a measured ratio with implied constant 1;
only exact identities (closed forms, zero differences) are ever asserted.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .arith import PrimeModulus, chi_table, is_prime, legendre, next_prime

DEFAULT_EPS = 0.1


def burgess_delta(eps: float, shorthand: bool = False) -> float:
    """Cancellation exponent for the short-interval regime.

    The exact form is eps^2 (1+4 eps)/(1+5 eps); shorthand=True gives the
    common eps^2 approximation.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if shorthand:
        return eps * eps
    return eps * eps * (1 + 4 * eps) / (1 + 5 * eps)


def pick_auxiliary_prime(x: float, delta: float) -> int:
    """Smallest prime N with N >= x^(1+delta)."""
    target = math.ceil(x ** (1.0 + delta))
    return target if target >= 2 and is_prime(target) else next_prime(max(target, 1))


@dataclass
class SumParams:
    """Parameter frame shared by the sum evaluators. p may be None for sums
    that do not involve the quadratic character (pure root-of-unity sums)."""

    p: int | None = None
    x: float = 1.0
    z: float | None = None
    N: int | None = None
    eps: float = DEFAULT_EPS
    delta: float | None = None
    a: int = 1
    b: int = 1
    t: int = 1

    def __post_init__(self):
        if self.p is not None:
            self.p = int(self.p)
        if self.delta is None:
            self.delta = burgess_delta(self.eps)

    def resolved_N(self) -> int:
        if self.N is None:
            self.N = pick_auxiliary_prime(self.x, self.delta)
        return self.N

    def check_complete_frame(self) -> int:
        """Enforce p^(1/4+eps) <= x < x^(1+delta) <= N < p; returns N."""
        N = self.resolved_N()
        if not is_prime(N):
            raise ValueError(f"N = {N} is not prime")
        if self.p is None:
            raise ValueError("complete-range sums need the modulus p")
        lo = self.p ** (0.25 + self.eps)
        if not (lo <= self.x < self.x ** (1.0 + self.delta) <= N < self.p):
            raise ValueError(
                f"parameter frame violated: need {lo:.6g} <= x < x^(1+delta) <= N < p, "
                f"got x={self.x}, x^(1+delta)={self.x ** (1 + self.delta):.6g}, N={N}, p={self.p}"
            )
        return N


class Kahan:
    """Compensated accumulator; keeps long-sum ratios clean of rounding."""

    __slots__ = ("total", "_c")

    def __init__(self):
        self.total = 0.0
        self._c = 0.0

    def add(self, v: float):
        y = v - self._c
        t = self.total + y
        self._c = (t - self.total) - y
        self.total = t


class KahanComplex:
    __slots__ = ("re", "im")

    def __init__(self):
        self.re = Kahan()
        self.im = Kahan()

    def add(self, v: complex):
        self.re.add(v.real)
        self.im.add(v.imag)

    @property
    def total(self) -> complex:
        return complex(self.re.total, self.im.total)


@dataclass
class SumReport:
    """An exactly evaluated sum next to its claimed bound."""

    lemma_id: str
    value: complex
    claimed_bound: float
    params: SumParams
    regime: str | None = None
    bound_holds: bool | None = None
    extras: dict = field(default_factory=dict)

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def ratio(self) -> float:
        if self.claimed_bound == 0:
            return math.inf if self.magnitude else 0.0
        return self.magnitude / self.claimed_bound


def roots_of_unity(N: int) -> list[complex]:
    return [cmath.exp(2j * math.pi * k / N) for k in range(N)]


def frac(v: float) -> float:
    return v - math.floor(v)


def interval_regime(p: int, x: float, eps: float) -> str:
    """long for x >= p^(1/2+eps), short for x > p^(1/4+eps), else sub-burgess."""
    if x >= p ** (0.5 + eps):
        return "long"
    if x > p ** (0.25 + eps):
        return "short"
    return "sub-burgess"


def char_sum(params: SumParams) -> SumReport:
    """Exact sum of chi(n) for n <= x, with the regime's claimed bound."""
    p, x = params.p, params.x
    if p is None:
        raise ValueError("char_sum needs the modulus p")
    if not (1 <= x < p):
        raise ValueError(f"need 1 <= x < p, got x={x}, p={p}")
    total = 0
    for n in range(1, math.floor(x) + 1):
        total += legendre(n, p)
    regime = interval_regime(p, x, params.eps)
    if regime == "long":
        lemma, bound = "T2212.455", math.sqrt(p) * math.log(p)
    elif regime == "short":
        lemma, bound = "T1212.450", x ** (1.0 - params.delta)
    else:
        lemma, bound = "TRIVIAL", x
    rep = SumReport(lemma, complex(total), bound, params, regime=regime)
    rep.bound_holds = rep.magnitude <= bound
    return rep


WEIGHTS = ("1", "1/n", "frac", "frac/n")

_SHORT_IDS = {"1/n": "L7212.500", "frac/n": "L7212.530", "1": "L7212.580", "frac": "L7212.590"}
_COMPLETE_IDS = {"1/n": "L9212.530", "frac/n": "L9212.540", "1": "L9212.535", "frac": "L9212.545"}


def _weight_fn(weight: str, x: float):
    if weight == "1":
        return lambda n: 1.0
    if weight == "1/n":
        return lambda n: 1.0 / n
    if weight == "frac":
        return lambda n: frac(x / n)
    if weight == "frac/n":
        return lambda n: frac(x / n) / n
    raise ValueError(f"unknown weight {weight!r}, expected one of {WEIGHTS}")


def _twisted_char_sum(p: int, hi: int, weight: str, x: float, twist: int | None, N: int | None) -> complex:
    """Core evaluator: sum over 1 <= n <= hi of w(n) chi(n) [e^(2 pi i twist n / N)]."""
    w = _weight_fn(weight, x)
    if twist is None:
        acc = Kahan()
        for n in range(1, hi + 1):
            c = legendre(n, p)
            if c:
                acc.add(c * w(n))
        return complex(acc.total)
    roots = roots_of_unity(N)
    acc2 = KahanComplex()
    for n in range(1, hi + 1):
        c = legendre(n, p)
        if c:
            acc2.add(c * w(n) * roots[(twist * n) % N])
    return acc2.total


def weighted_sum(
    params: SumParams,
    weight: str = "1/n",
    twisted: bool = False,
    complete: bool = False,
) -> SumReport:
    """Weighted character sum over n <= x (short) or n < N (complete).

    weight "1" untwisted over the short range reproduces char_sum exactly.
    Claimed bounds: log x for the 1/n-weighted forms, x^(1-delta) otherwise,
    both with implied constant 1.
    """
    p, x = params.p, params.x
    if p is None:
        raise ValueError("weighted_sum needs the modulus p")
    if not (1 <= x < p):
        raise ValueError(f"need 1 <= x < p, got x={x}, p={p}")
    if weight not in WEIGHTS:
        raise ValueError(f"unknown weight {weight!r}, expected one of {WEIGHTS}")
    if complete:
        N = params.check_complete_frame()
        hi = N - 1
    else:
        N = params.resolved_N() if twisted else params.N
        if twisted and not is_prime(N):
            raise ValueError(f"N = {N} is not prime")
        hi = math.floor(x)
    if weight == "1" and not twisted:
        value = complex(sum(legendre(n, p) for n in range(1, hi + 1)))
    else:
        value = _twisted_char_sum(p, hi, weight, x, params.a if twisted else None, N)
    bound = math.log(x) if weight in ("1/n", "frac/n") else x ** (1.0 - params.delta)
    lemma = (_COMPLETE_IDS if complete else _SHORT_IDS)[weight] + ("ii" if twisted else "i")
    return SumReport(lemma, value, bound, params)


def geometric_sum(N: int, t: int, x: float) -> SumReport:
    """Sum of e^(2 pi i n t / N) for 1 <= n <= x, evaluated two ways.

    Direct summation and the geometric closed form must agree to 1e-9
    (relative, floored at magnitude 1); disagreement raises. The claimed
    bound 2N/(pi t) is recorded, not asserted: it genuinely fails for t
    near N.
    """
    if not is_prime(N):
        raise ValueError(f"N = {N} must be prime")
    if not (1 <= t < N):
        raise ValueError(f"need 1 <= t < N (t = 0 mod N is degenerate), got t={t}, N={N}")
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    M = math.floor(x)
    roots = roots_of_unity(N)
    acc = KahanComplex()
    for n in range(1, M + 1):
        acc.add(roots[(n * t) % N])
    direct = acc.total
    r = roots[t % N]
    closed = r * (roots[(t * M) % N] - 1.0) / (r - 1.0)
    gap = abs(direct - closed) / max(1.0, abs(closed))
    if gap > 1e-9:
        raise ArithmeticError(
            f"direct and closed-form evaluations disagree: |{direct} - {closed}| rel {gap:.3g}"
        )
    bound = 2.0 * N / (math.pi * t)
    rep = SumReport(
        "L9212.550",
        closed,
        bound,
        SumParams(p=None, x=float(x), N=N, t=t),
        bound_holds=abs(closed) <= bound,
        extras={"direct_re": direct.real, "direct_im": direct.imag, "form_gap": gap},
    )
    return rep


def geometric_grid_check(n_max: int = 997, x_factors=(0.5, 1.0, 2.0), tol: float = 1e-9):
    """Vectorized sweep of geometric_sum's two evaluation routes.

    Returns (worst_gap, violations) where violations lists every (N, t, x)
    at which the claimed 2N/(pi t) bound fails. Used by the verification
    registry; the closed form here mirrors geometric_sum exactly.
    """
    worst = 0.0
    violations = []
    checked = 0
    N = 2
    while N <= n_max:
        roots = np.exp(2j * np.pi * np.arange(N) / N)
        ts = np.arange(1, N)
        for fx in x_factors:
            M = math.floor(N * fx)
            if M < 1:
                continue
            idx = np.outer(ts, np.arange(1, M + 1)) % N
            direct = roots[idx].sum(axis=1)
            r = roots[ts]
            closed = r * (roots[(ts * M) % N] - 1.0) / (r - 1.0)
            gap = np.abs(direct - closed) / np.maximum(1.0, np.abs(closed))
            worst = max(worst, float(gap.max()))
            checked += len(ts)
            bound = 2.0 * N / (np.pi * ts)
            for i in np.nonzero(np.abs(direct) > bound)[0]:
                violations.append(
                    {"N": N, "t": int(ts[i]), "x": float(N * fx),
                     "magnitude": float(np.abs(direct[i])), "claimed_bound": float(bound[i])}
                )
        N = next_prime(N)
    return worst, violations, checked


def equivalent_sum_difference(params: SumParams, weight: str = "1/n") -> SumReport:
    """D(x): the twisted sum at frequency b minus the same sum at frequency 1.

    weight "1/n" carries the (log x)^2 claimed bound, weight "1" carries
    x^(1-delta). b = 1 gives exactly zero.
    """
    if weight not in ("1/n", "1"):
        raise ValueError(f"weight must be '1/n' or '1', got {weight!r}")
    N = params.check_complete_frame()
    b = params.b
    if b % N == 0:
        raise ValueError(f"b = {b} is 0 mod N = {N}")
    p, x = params.p, params.x
    hi = math.floor(x)
    at_b = _twisted_char_sum(p, hi, weight, x, b % N, N)
    at_1 = _twisted_char_sum(p, hi, weight, x, 1, N)
    value = at_b - at_1
    bound = math.log(x) ** 2 if weight == "1/n" else x ** (1.0 - params.delta)
    lemma = "L1215.800" if weight == "1/n" else "L1215.850"
    return SumReport(
        lemma, value, bound, params,
        extras={"sum_at_b_re": at_b.real, "sum_at_b_im": at_b.imag,
                "sum_at_1_re": at_1.real, "sum_at_1_im": at_1.imag},
    )


@dataclass(frozen=True)
class FracFourierReport:
    series_value: float
    frac_value: float
    error: float
    at_jump: bool


def frac_fourier_error(n: int, x: float, w: int) -> FracFourierReport:
    """Truncated sawtooth Fourier series vs the exact fractional part of x/n.

    series = 1/2 - sum_{m<=w} sin(2 pi m x/n)/(pi m). At jump points
    (x/n integral) the series tends to 1/2 rather than 0; the report is
    flagged instead of raising.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if w < 1:
        raise ValueError(f"need w >= 1, got {w}")
    theta = x / n
    exact = frac(theta)
    acc = Kahan()
    for m in range(1, w + 1):
        acc.add(math.sin(2.0 * math.pi * m * theta) / (math.pi * m))
    series = 0.5 - acc.total
    return FracFourierReport(series, exact, series - exact, at_jump=(exact == 0.0))


def polya_vinogradov_extremum(p: int | PrimeModulus) -> tuple[int, int]:
    """(max over 1 <= x < p of |sum_{n<=x} chi(n)|, the first argmax x).

    Whole-period walk on the exact character table; integers throughout.
    """
    p = int(p)
    table = chi_table(p)
    run = 0
    best = 0
    best_x = 1
    for n in range(1, p):
        run += table[n]
        m = run if run >= 0 else -run
        if m > best:
            best, best_x = m, n
    return best, best_x
