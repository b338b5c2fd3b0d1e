#!/usr/bin/env python3
"""Scan a prime range for n_p records and exponent statistics.

Writes the full record CSV plus a one-line summary, e.g.

    python scripts/exponent_scan.py --hi 1000000 --out records.csv
"""

import argparse
import sys

sys.path.insert(0, "src")

from nrlab.nonresidue import scan  # noqa: E402
from nrlab.reports import SCAN_FIELDS, write_csv  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=1_000_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--records-only", action="store_true")
    ap.add_argument("--out", default="nonresidue_records.csv")
    args = ap.parse_args()

    result = scan(args.lo, args.hi, records_only=args.records_only, workers=args.workers)
    write_csv(args.out, SCAN_FIELDS, result.rows())
    print(result.summary.one_line())
    print(f"record breakers: {result.summary.record_breakers}")
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
