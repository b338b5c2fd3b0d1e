#!/usr/bin/env python3
"""Emit the falsification dossiers: measured bound ratios for the claims that
cannot be asserted, as one CSV per claim plus a verdict summary.

The sweeps cover moduli sampled geometrically in [1e3, 1e6] at eps = 0.1.
Output is deterministic: rerunning into the same directory reproduces every
file byte for byte.

    python scripts/falsification_dossiers.py --outdir dossiers
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, "src")

from nrlab import shrinking, verify  # noqa: E402
from nrlab.reports import SUM_FIELDS, VERDICT_FIELDS, sum_report_row, write_csv  # noqa: E402

DOSSIER_IDS = [
    "L1215.800",
    "L1215.850",
    "L5215.300",
    "T4015.300s",
    "T4015.300l",
    "T1234.000",
    "T1234.500",
]


def premise_series(lo: int, hi: int) -> list[dict]:
    """Premise character-sum ratios for the tight-cutoff test, sampled moduli."""
    rows = []
    for p in verify.sample_primes_geometric(lo, hi):
        x = p ** 0.35
        verdict = shrinking.shrinking_test(p, x, with_premise=True)
        row = sum_report_row(verdict.charsum_premise)
        row["z"] = verdict.z
        rows.append(row)
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="dossiers")
    ap.add_argument("--nmax", type=int, default=1_000_000)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    verdicts = []
    for lemma in DOSSIER_IDS:
        v = verify.run_lemma(lemma, args.nmax)
        verdicts.append(v)
        path = outdir / f"{lemma.replace('.', '_')}.csv"
        write_csv(str(path), v.fields or SUM_FIELDS, v.rows)
        print(f"{v}  -> {path}")

    premise_path = outdir / "T1234_500_premise.csv"
    write_csv(str(premise_path), SUM_FIELDS, premise_series(1_000, args.nmax))
    print(f"premise ratio series -> {premise_path}")

    write_csv(str(outdir / "summary.csv"), VERDICT_FIELDS,
              [v.summary_row() for v in verdicts])
    print(f"verdict summary -> {outdir / 'summary.csv'}")
    return 1 if any(v.passed is False for v in verdicts) else 0


if __name__ == "__main__":
    sys.exit(main())
