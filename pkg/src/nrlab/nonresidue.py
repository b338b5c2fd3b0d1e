"""Least quadratic nonresidue: exact search, range scans, exponent records."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .arith import PrimeModulus, is_prime, iter_primes, legendre, next_prime, primes_in
from .reports import VerificationVerdict


@dataclass(frozen=True)
class ExponentThresholds:
    """The two exponent scales every scanned record is compared against."""

    burgess: float = 1.0 / (4.0 * math.sqrt(math.e))
    claimed: float = 1.0 / (4.0 * math.e)

    @property
    def gap(self) -> float:
        return self.burgess - self.claimed


DEFAULT_THRESHOLDS = ExponentThresholds()


@dataclass(frozen=True)
class NonresidueRecord:
    p: int
    n_p: int
    exponent: float  # log(n_p) / log(p)
    progression: tuple[int, int] | None = None


class SearchExhausted(RuntimeError):
    """No qualifying nonresidue below the modulus; the input is degenerate."""


def _record(p: int, n: int, progression=None) -> NonresidueRecord:
    return NonresidueRecord(p, n, math.log(n) / math.log(p), progression)


# Candidates only need to be prime: if every prime below n is a residue, so
# is every product of them. The precomputed list covers any word-range p.
_TRIAL_PRIMES = primes_in(2, 1000)


def least_nonresidue(p: int | PrimeModulus) -> NonresidueRecord:
    """Smallest n >= 2 with chi(n) = -1 modulo the odd prime p."""
    pp = int(p)
    if pp < 3 or pp % 2 == 0:
        raise ValueError(f"need an odd prime >= 3, got {pp}")
    for q in _TRIAL_PRIMES:
        if q >= pp:
            break
        if legendre(q, pp) == -1:
            return _record(pp, q)
    q = _TRIAL_PRIMES[-1]
    while True:
        q = next_prime(q)
        if q >= pp:
            raise SearchExhausted(f"no nonresidue below {pp}; modulus not an odd prime?")
        if legendre(q, pp) == -1:
            return _record(pp, q)


def least_nonresidue_in_ap(
    p: int | PrimeModulus, a: int, q: int, warn_exponent: float | None = None
) -> NonresidueRecord:
    """Smallest n >= 2 with n = a (mod q) and chi(n) = -1, searching n < p.

    q = 1 degenerates to the unconstrained search. warn_exponent, when given,
    soft-checks q <= (log p)^warn_exponent; the constraint is advisory.
    """
    pp = int(p)
    if pp < 3 or pp % 2 == 0:
        raise ValueError(f"need an odd prime >= 3, got {pp}")
    if q < 1:
        raise ValueError(f"progression modulus must be >= 1, got {q}")
    if q == 1:
        if a != 1:
            raise ValueError("q = 1 requires a = 1")
    elif not (1 <= a < q):
        raise ValueError(f"need 1 <= a < q, got a={a}, q={q}")
    if math.gcd(a, q) != 1:
        raise ValueError(f"a and q must be coprime, got a={a}, q={q}")
    if warn_exponent is not None and q > math.log(pp) ** warn_exponent:
        warnings.warn(
            f"q={q} exceeds (log p)^{warn_exponent} = {math.log(pp) ** warn_exponent:.3f}",
            stacklevel=2,
        )
    n = a
    while n < 2:
        n += q
    while n < pp:
        if legendre(n, pp) == -1:
            return _record(pp, n, progression=(a, q))
        n += q
    raise SearchExhausted(f"no n = {a} (mod {q}) with chi(n) = -1 below p = {pp}")


@dataclass
class ScanSummary:
    """Associatively mergeable aggregate of a prime-range scan."""

    lo: int
    hi: int
    scanned: int = 0
    max_exponent: float = 0.0
    max_exponent_p: int = 0
    max_exponent_n: int = 0
    max_n_p: int = 0
    max_n_p_at: int = 0
    over_burgess: int = 0
    over_claimed: int = 0
    record_breakers: list[tuple[int, int]] = field(default_factory=list)
    thresholds: ExponentThresholds = field(default_factory=ExponentThresholds)

    def absorb(self, rec: NonresidueRecord) -> bool:
        """Fold one record in; returns True when it breaks the n_p record."""
        self.scanned += 1
        if rec.exponent > self.max_exponent:
            self.max_exponent = rec.exponent
            self.max_exponent_p = rec.p
            self.max_exponent_n = rec.n_p
        if rec.exponent > self.thresholds.burgess:
            self.over_burgess += 1
        if rec.exponent > self.thresholds.claimed:
            self.over_claimed += 1
        if rec.n_p > self.max_n_p:
            self.max_n_p = rec.n_p
            self.max_n_p_at = rec.p
            self.record_breakers.append((rec.p, rec.n_p))
            return True
        return False

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        """Merge a later (higher-p) chunk into this one. Order matters only
        for the record-breaker refiltering; all extrema are associative."""
        out = replace(self)
        out.hi = max(self.hi, other.hi)
        out.lo = min(self.lo, other.lo)
        out.scanned = self.scanned + other.scanned
        if other.max_exponent > out.max_exponent:
            out.max_exponent = other.max_exponent
            out.max_exponent_p = other.max_exponent_p
            out.max_exponent_n = other.max_exponent_n
        out.over_burgess = self.over_burgess + other.over_burgess
        out.over_claimed = self.over_claimed + other.over_claimed
        out.record_breakers = list(self.record_breakers)
        out.max_n_p, out.max_n_p_at = self.max_n_p, self.max_n_p_at
        for p, n in other.record_breakers:
            if n > out.max_n_p:
                out.max_n_p, out.max_n_p_at = n, p
                out.record_breakers.append((p, n))
        return out

    def one_line(self) -> str:
        return (
            f"scanned={self.scanned} range=[{self.lo},{self.hi}] "
            f"max_n_p={self.max_n_p}@{self.max_n_p_at} "
            f"max_exponent={self.max_exponent:.10g}@{self.max_exponent_p} "
            f"over_burgess={self.over_burgess} over_claimed={self.over_claimed} "
            f"records={len(self.record_breakers)}"
        )


@dataclass
class ScanResult:
    records: list[NonresidueRecord]
    summary: ScanSummary

    def rows(self):
        breakers = set(self.summary.record_breakers)
        for r in self.records:
            yield {
                "p": r.p,
                "n_p": r.n_p,
                "exponent": float(f"{r.exponent:.15g}"),
                "is_record": (r.p, r.n_p) in breakers,
            }


def _scan_chunk(args) -> tuple[list[NonresidueRecord], ScanSummary]:
    lo, hi, thresholds, records_only = args
    summary = ScanSummary(lo=lo, hi=hi, thresholds=thresholds)
    records: list[NonresidueRecord] = []
    for p in iter_primes(max(lo, 3), hi):
        rec = least_nonresidue(p)
        broke = summary.absorb(rec)
        if broke or not records_only:
            records.append(rec)
    return records, summary


def scan(
    lo: int,
    hi: int,
    thresholds: ExponentThresholds = DEFAULT_THRESHOLDS,
    records_only: bool = False,
    workers: int = 1,
) -> ScanResult:
    """Compute n_p and its exponent for every prime in [lo, hi].

    Chunked and mergeable: the output is identical for any worker count,
    with records emitted in increasing p.
    """
    if not (0 <= lo <= hi):
        raise ValueError(f"need 0 <= lo <= hi, got [{lo}, {hi}]")
    if workers <= 1 or hi - lo < 1 << 12:
        records, summary = _scan_chunk((lo, hi, thresholds, records_only))
        return ScanResult(records, summary)
    nchunks = workers * 4
    span = (hi - lo) // nchunks + 1
    chunks = [
        (c_lo, min(c_lo + span - 1, hi), thresholds, records_only)
        for c_lo in range(lo, hi + 1, span)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    records, summary = parts[0]
    records = list(records)
    for recs, summ in parts[1:]:
        summary = summary.merge(summ)
        records.extend(recs)
    if records_only:
        breakers = set(summary.record_breakers)
        records = [r for r in records if (r.p, r.n_p) in breakers]
    return ScanResult(records, summary)


def _np_pairs(lo: int, hi: int):
    for p in iter_primes(max(lo, 3), hi):
        yield p, least_nonresidue(p).n_p


def gauss_bound_check(lo: int, hi: int) -> VerificationVerdict:
    """Check n_p < 2*sqrt(p) + 1 for every prime in [lo, hi], exactly.

    The comparison is done in integers: n_p < 2 sqrt(p) + 1 iff
    (n_p - 1)^2 < 4p.
    """
    v = VerificationVerdict("S1221.G1", grid=f"primes in [{lo}, {hi}]", passed=True)
    worst = -1.0
    for p, n in _np_pairs(lo, hi):
        v.checked += 1
        if (n - 1) * (n - 1) >= 4 * p:
            v.passed = False
            v.failures.append({"p": p, "n_p": n})
        ratio = n / (2.0 * math.sqrt(p) + 1.0)
        if ratio > worst:
            worst = ratio
            v.worst_ratio = ratio
            v.worst_case = {"p": p, "n_p": n}
    return v


def structure_check(lo: int, hi: int) -> VerificationVerdict:
    """Exact structural facts about n_p over a prime range.

    Checks, per prime: n_p is itself prime; n_p = 2 exactly for
    p = 3, 5 (mod 8); and the classical square-root bound.
    """
    v = VerificationVerdict("S1221.NP", grid=f"primes in [{lo}, {hi}]", passed=True)
    worst = -1.0
    max_n, max_n_at = 0, 0
    for p, n in _np_pairs(lo, hi):
        v.checked += 1
        bad = None
        if not is_prime(n):
            bad = "n_p composite"
        elif (p % 8 in (3, 5)) != (n == 2):
            bad = "mod-8 class mismatch"
        elif (n - 1) * (n - 1) >= 4 * p:
            bad = "square-root bound violated"
        if bad:
            v.passed = False
            v.failures.append({"p": p, "n_p": n, "reason": bad})
        ratio = n / (2.0 * math.sqrt(p) + 1.0)
        if ratio > worst:
            worst = ratio
            v.worst_ratio = ratio
            v.worst_case = {"p": p, "n_p": n}
        if n > max_n:
            max_n, max_n_at = n, p
    v.notes = f"max n_p={max_n} at p={max_n_at}"
    return v
