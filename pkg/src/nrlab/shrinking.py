"""Decomposition of character sums into prime-counting forms, and the
empirical cutoff tests: does a nonresidue appear below x^(1/sqrt e), below
x^(1/e)?

The count form is an exact identity. The prime form is the measured object:
its residual against the true sum is this module's central probe, and no
cutoff conclusion is ever asserted, only tallied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .arith import chi_table, legendre, iter_primes, primes_in
from .charsums import SumParams, SumReport
from .nonresidue import least_nonresidue
from .primesums import EULER_GAMMA, AsymptoticReport, PrimeSumParams, _floor_div

INV_E = 1.0 / math.e
INV_SQRT_E = 1.0 / math.sqrt(math.e)

# Verdicts below this x are tagged below-asymptotic and excluded from
# aggregate fractions by default.
SMALL_X = 100.0


@dataclass
class DecompositionReport:
    p: int
    x: float
    z: float
    lhs: int
    count_form: int
    prime_form: int
    hypothesis_holds: bool

    @property
    def residual(self) -> int:
        return self.lhs - self.prime_form


def decompose(p: int, x: float, z: float) -> DecompositionReport:
    """All three forms of sum_{n<=x} chi(n), exactly.

    lhs: direct summation. count_form: [x] - 2 #{n <= x : chi(n) = -1},
    an identity since x < p keeps every term in {-1, +1}. prime_form:
    [x] - 2 sum_{z<=q<=x, chi(q)=-1} [x/q], the single-prime counting
    surrogate whose residual is the quantity of interest.
    hypothesis_holds records whether chi(n) = +1 for all n <= z.
    """
    pp = int(p)
    if x >= pp:
        raise ValueError(f"need x < p, got x={x}, p={pp}")
    if not (0 <= z <= x):
        raise ValueError(f"need 0 <= z <= x, got z={z}, x={x}")
    m = math.floor(x)
    lhs = 0
    negatives = 0
    hyp = True
    zf = math.floor(z)
    for n in range(1, m + 1):
        c = legendre(n, pp)
        lhs += c
        if c == -1:
            negatives += 1
            if n <= zf:
                hyp = False
    prime_form = m - 2 * sum(
        _floor_div(x, q)
        for q in primes_in(max(2, math.ceil(z)), m)
        if legendre(q, pp) == -1
    )
    return DecompositionReport(pp, x, z, lhs, m - 2 * negatives, prime_form, hyp)


def decompose_sweep(
    p: int, xs, z_of_x: Callable[[float], float] | None = None, include_prime_form: bool = True
) -> list[DecompositionReport]:
    """decompose() at several cutoffs of one modulus, sharing one table walk.

    z defaults to x^(1/e) per point. Values match decompose() exactly.
    """
    pp = int(p)
    xs = sorted(xs)
    if xs and xs[-1] >= pp:
        raise ValueError(f"need every x < p, got max x = {xs[-1]}, p = {pp}")
    if z_of_x is None:
        z_of_x = lambda x: x ** INV_E
    table = chi_table(pp)
    qs = primes_in(2, math.floor(xs[-1])) if xs else []
    out = []
    run = 0
    negatives = 0
    first_negative = pp  # smallest n with chi(n) = -1 seen so far
    n = 0
    for x in xs:
        m = math.floor(x)
        while n < m:
            n += 1
            c = table[n]
            run += c
            if c == -1:
                negatives += 1
                if n < first_negative:
                    first_negative = n
        z = z_of_x(x)
        if include_prime_form:
            prime_form = m - 2 * sum(
                _floor_div(x, q) for q in qs if z <= q <= x and table[q] == -1
            )
        else:
            prime_form = 0
        out.append(
            DecompositionReport(
                pp, x, z, run, m - 2 * negatives, prime_form,
                hypothesis_holds=first_negative > math.floor(z),
            )
        )
    return out


@dataclass
class ShrinkingVerdict:
    p: int
    x: float
    z: float
    n_p: int
    conclusion_holds: bool
    below_asymptotic: bool
    variant: str
    charsum_premise: SumReport | None = None


def _premise_report(p: int, x: float, bound: float, lemma: str) -> SumReport:
    value = sum(legendre(n, p) for n in range(1, math.floor(x) + 1))
    return SumReport(lemma, complex(value), bound, SumParams(p=p, x=x))


def _cutoff_test(p, x: float, root: float, variant: str, lemma: str,
                 premise_bound: Callable[[float], float], with_premise: bool) -> ShrinkingVerdict:
    pp = int(p)
    if x >= pp:
        raise ValueError(f"need x < p, got x={x}, p={pp}")
    z = x ** root
    rec = least_nonresidue(pp)
    premise = _premise_report(pp, x, premise_bound(x), lemma) if with_premise else None
    return ShrinkingVerdict(
        pp, x, z, rec.n_p,
        conclusion_holds=rec.n_p <= z,
        below_asymptotic=x < SMALL_X,
        variant=variant,
        charsum_premise=premise,
    )


def vinogradov_test(p, x: float, with_premise: bool = True) -> ShrinkingVerdict:
    """Classical cutoff z = x^(1/sqrt e): is n_p <= z? Premise scale o(x)."""
    return _cutoff_test(p, x, INV_SQRT_E, "sqrt_e", "T1234.000", lambda xx: xx, with_premise)


def shrinking_test(p, x: float, with_premise: bool = True) -> ShrinkingVerdict:
    """Tightened cutoff z = x^(1/e): is n_p <= z? Premise scale x/log x."""
    return _cutoff_test(
        p, x, INV_E, "e", "T1234.500", lambda xx: xx / math.log(xx), with_premise
    )


@dataclass
class SweepSummary:
    lo: int
    hi: int
    eps: float
    variant: str
    total: int = 0
    excluded_small: int = 0
    failures: int = 0
    min_c: float = 0.0  # smallest c with n_p <= c p^(1/4e + eps) across the sweep

    @property
    def failure_fraction(self) -> float:
        counted = self.total - self.excluded_small
        return self.failures / counted if counted else 0.0


def cutoff_sweep(lo: int, hi: int, eps: float = 0.1, variant: str = "e",
                 include_small: bool = False) -> tuple[list[dict], SweepSummary]:
    """Run the cutoff test at x = p^(1/4+eps) for every prime in [lo, hi].

    Verdicts with x below the asymptotic tag are excluded from the failure
    fraction unless include_small is set. Per-prime rows are returned for
    CSV emission.
    """
    if variant not in ("e", "sqrt_e"):
        raise ValueError(f"variant must be 'e' or 'sqrt_e', got {variant!r}")
    root = INV_E if variant == "e" else INV_SQRT_E
    target_exp = 1.0 / (4.0 * math.e) + eps
    summary = SweepSummary(lo=lo, hi=hi, eps=eps, variant=variant)
    rows = []
    for p in iter_primes(max(lo, 3), hi):
        x = p ** (0.25 + eps)
        z = x ** root
        n_p = least_nonresidue(p).n_p
        holds = n_p <= z
        small = x < SMALL_X
        c = n_p / p ** target_exp
        summary.total += 1
        if small and not include_small:
            summary.excluded_small += 1
        elif not holds:
            summary.failures += 1
        if c > summary.min_c:
            summary.min_c = c
        rows.append(
            {"p": p, "x": x, "z": z, "n_p": n_p, "lhs": None, "count_form": None,
             "prime_form": None, "residual": None, "hypothesis_holds": None,
             "conclusion_holds": holds}
        )
    return rows, summary


def contradiction_audit(p, x: float) -> AsymptoticReport:
    """Term-by-term audit of the prime-form expansion at z = x^(1/e).

    Requires the hypothesis state n_p > x^(1/e). Every bookkeeping term is
    exact: [x], S0 = sum [x/q], S1 = sum [x/q] chi(q) over primes in [z, x],
    and [x] - S0 + S1 equals the prime form identically. The report's main
    term is the claimed expansion [x] - x log(log x/log z) + (1-gamma)
    (x/log x - z/log z); the residual against the true character sum is the
    measured gap.
    """
    pp = int(p)
    if x >= pp:
        raise ValueError(f"need x < p, got x={x}, p={pp}")
    z = x ** INV_E
    rec = least_nonresidue(pp)
    if rec.n_p <= z:
        raise ValueError(
            f"hypothesis absent: n_p = {rec.n_p} <= x^(1/e) = {z:.6g} at p = {pp}"
        )
    m = math.floor(x)
    qs = primes_in(max(2, math.ceil(z)), m)
    s0 = sum(_floor_div(x, q) for q in qs)
    s1 = sum(_floor_div(x, q) * legendre(q, pp) for q in qs)
    lhs = sum(legendre(n, pp) for n in range(1, m + 1))
    prime_form = m - s0 + s1
    lx, lz = math.log(x), math.log(z)
    mertens_term = x * math.log(lx / lz)
    gamma_term = (1.0 - EULER_GAMMA) * (x / lx - z / lz)
    main = m - mertens_term + gamma_term
    params = PrimeSumParams(p=pp, x=x, z=z)
    return AsymptoticReport(
        "E1234.525", float(lhs), main, x / lx ** 2, params,
        terms={
            "floor_x": m, "s0": s0, "s1": s1, "lhs": lhs, "prime_form": prime_form,
            "mertens_term": mertens_term, "gamma_term": gamma_term,
            "cancellation": m - mertens_term, "residual_int": lhs - prime_form,
            "n_p": rec.n_p, "z": z,
        },
    )
