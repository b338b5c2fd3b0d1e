"""Command-line surface: range scans, sum batteries, claim verification,
decomposition rows, and term audits.

Every run is seed-free and deterministic: identical configuration gives
byte-identical output, regardless of worker count. Exit codes: 0 success,
1 zero-tolerance invariant violation, 2 configuration error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass

from . import charsums, primesums, shrinking, verify
from .arith import is_prime
from .charsums import SumParams
from .nonresidue import least_nonresidue, scan
from .primesums import PrimeSumParams
from .reports import (
    DECOMP_FIELDS,
    SCAN_FIELDS,
    SUM_FIELDS,
    VERDICT_FIELDS,
    render,
    sum_report_row,
)

INV_E = 1.0 / math.e


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("NRLAB_WORKERS", "1")))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    command: str
    lo: int | None = None
    hi: int | None = None
    p: int | None = None
    x: float | None = None
    z: float | None = None
    eps: float = 0.1
    delta: float | None = None
    a: int = 1
    b: int = 1
    t: int = 1
    N: int | None = None
    lemma: str | None = None
    all: bool = False
    nmax: int | None = None
    out: str | None = None
    format: str = "csv"
    workers: int = 1
    records_only: bool = False


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nrlab",
        description="quadratic nonresidue, character-sum, and prime-sum lab",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--out", help="output file path (stdout when omitted)")
        sp.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    sp = sub.add_parser("scan", help="n_p and exponent for every prime in a range")
    sp.add_argument("--lo", type=int, required=True)
    sp.add_argument("--hi", type=int, required=True)
    sp.add_argument("--workers", type=int, default=default_workers())
    sp.add_argument("--records-only", action="store_true", dest="records_only",
                    help="keep only record-breaking rows")
    add_common(sp)

    sp = sub.add_parser("sums", help="interval character-sum battery at one (p, x)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--z", type=float)
    sp.add_argument("--eps", type=float, default=0.1)
    sp.add_argument("--delta", type=float)
    sp.add_argument("--a", type=int, default=1)
    sp.add_argument("--b", type=int, default=2)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--N", type=int)
    add_common(sp)

    sp = sub.add_parser("prime-sums", help="prime-restricted sum battery at one (p, x, z)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--z", type=float, help="lower cutoff; default x^(1/e)")
    sp.add_argument("--eps", type=float, default=0.1)
    sp.add_argument("--delta", type=float)
    sp.add_argument("--N", type=int)
    add_common(sp)

    sp = sub.add_parser("verify", help="run a catalogued claim's grid, or all of them")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--lemma", help="claim id, e.g. L5515.200")
    group.add_argument("--all", action="store_true")
    sp.add_argument("--nmax", type=int, help="grid size override")
    add_common(sp)

    sp = sub.add_parser("decompose", help="three-form decomposition row at (p, x, z)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--z", type=float, help="default x^(1/e)")
    add_common(sp)

    sp = sub.add_parser("audit", help="term-by-term expansion audit at (p, x)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", type=float, required=True)
    add_common(sp)

    return ap


def _emit(config: RunConfig, fieldnames, rows) -> None:
    text = render(fieldnames, rows, config.format)
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_scan(config: RunConfig) -> int:
    result = scan(config.lo, config.hi, records_only=config.records_only,
                  workers=config.workers)
    bad = []
    for rec in result.records:
        if not is_prime(rec.n_p):
            bad.append((rec, "n_p composite"))
        elif (rec.p % 8 in (3, 5)) != (rec.n_p == 2):
            bad.append((rec, "mod-8 class mismatch"))
        elif (rec.n_p - 1) ** 2 >= 4 * rec.p:
            bad.append((rec, "square-root bound violated"))
    _emit(config, SCAN_FIELDS, result.rows())
    print(result.summary.one_line(), file=sys.stderr)
    for rec, reason in bad:
        print(f"INVARIANT VIOLATION: {reason}: {rec}", file=sys.stderr)
    return 1 if bad else 0


def _run_sums(config: RunConfig) -> int:
    params = SumParams(p=config.p, x=config.x, z=config.z, N=config.N,
                       eps=config.eps, delta=config.delta,
                       a=config.a, b=config.b, t=config.t)
    rows = [sum_report_row(charsums.char_sum(params))]
    for weight in charsums.WEIGHTS:
        rows.append(sum_report_row(charsums.weighted_sum(params, weight=weight)))
        rows.append(sum_report_row(charsums.weighted_sum(params, weight=weight, twisted=True)))
    frame_ok = True
    try:
        params.check_complete_frame()
    except ValueError as exc:
        frame_ok = False
        print(f"note: skipping complete-range sums ({exc})", file=sys.stderr)
    if frame_ok:
        for weight in charsums.WEIGHTS:
            rows.append(sum_report_row(charsums.weighted_sum(params, weight=weight, complete=True)))
            rows.append(sum_report_row(
                charsums.weighted_sum(params, weight=weight, twisted=True, complete=True)))
        for weight in ("1/n", "1"):
            rows.append(sum_report_row(charsums.equivalent_sum_difference(params, weight=weight)))
    N = params.resolved_N()
    rows.append(sum_report_row(charsums.geometric_sum(N, config.t, config.x)))
    _emit(config, SUM_FIELDS, rows)
    return 0


def _run_prime_sums(config: RunConfig) -> int:
    z = config.z if config.z is not None else config.x ** INV_E
    params = PrimeSumParams(p=config.p, x=config.x, z=z, N=config.N,
                            eps=config.eps, delta=config.delta)
    floor_rep = primesums.floor_weight_prime_sum(params)
    mertens_rep = primesums.mertens_slice(params)
    frac_rep = primesums.frac_part_prime_sum(params)
    rows = [sum_report_row(floor_rep), sum_report_row(mertens_rep), sum_report_row(frac_rep)]
    twisted = primesums.twisted_floor_prime_sum(params)
    rows.append(sum_report_row(twisted))
    rows.append(sum_report_row(primesums.prime_char_sum(params, regime="short")))
    if config.x >= config.p ** (0.5 + params.eps):
        rows.append(sum_report_row(primesums.prime_char_sum(params, regime="long")))
    _emit(config, SUM_FIELDS, rows)
    gap = abs(floor_rep.exact - (config.x * mertens_rep.exact - frac_rep.exact))
    if gap > 1e-6:
        print(f"INVARIANT VIOLATION: floor/frac bookkeeping gap {gap:.3g}", file=sys.stderr)
        return 1
    return 0


def _run_verify(config: RunConfig) -> int:
    verdicts = verify.run_all(config.nmax) if config.all else [
        verify.run_lemma(config.lemma, config.nmax)
    ]
    for v in verdicts:
        print(str(v))
    if config.out:
        if config.all:
            _emit(config, VERDICT_FIELDS, [v.summary_row() for v in verdicts])
        else:
            v = verdicts[0]
            _emit(config, v.fields or SUM_FIELDS, v.rows)
    return 1 if any(v.passed is False for v in verdicts) else 0


def _run_decompose(config: RunConfig) -> int:
    z = config.z if config.z is not None else config.x ** INV_E
    rep = shrinking.decompose(config.p, config.x, z)
    n_p = least_nonresidue(config.p).n_p
    row = {
        "p": rep.p, "x": rep.x, "z": rep.z, "n_p": n_p,
        "lhs": rep.lhs, "count_form": rep.count_form, "prime_form": rep.prime_form,
        "residual": rep.residual, "hypothesis_holds": rep.hypothesis_holds,
        "conclusion_holds": n_p <= z,
    }
    _emit(config, DECOMP_FIELDS, [row])
    if rep.lhs != rep.count_form:
        print(f"INVARIANT VIOLATION: lhs {rep.lhs} != count form {rep.count_form}",
              file=sys.stderr)
        return 1
    return 0


def _run_audit(config: RunConfig) -> int:
    rep = shrinking.contradiction_audit(config.p, config.x)
    for key, val in rep.terms.items():
        print(f"{key} = {val}", file=sys.stderr)
    print(f"exact = {rep.exact}", file=sys.stderr)
    print(f"main_term = {rep.main_term}", file=sys.stderr)
    print(f"normalized_residual = {rep.normalized_residual}", file=sys.stderr)
    _emit(config, SUM_FIELDS, [sum_report_row(rep)])
    if rep.terms["prime_form"] != rep.terms["floor_x"] - rep.terms["s0"] + rep.terms["s1"]:
        print("INVARIANT VIOLATION: term bookkeeping broke", file=sys.stderr)
        return 1
    return 0


_RUNNERS = {
    "scan": _run_scan,
    "sums": _run_sums,
    "prime-sums": _run_prime_sums,
    "verify": _run_verify,
    "decompose": _run_decompose,
    "audit": _run_audit,
}


def run(config: RunConfig) -> int:
    return _RUNNERS[config.command](config)


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    fields = {f: getattr(ns, f) for f in RunConfig.__dataclass_fields__ if hasattr(ns, f)}
    config = RunConfig(**fields)
    try:
        return run(config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
