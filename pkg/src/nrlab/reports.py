"""Report records and flat-file emission (CSV and JSONL, LF line endings)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable

SUM_FIELDS = [
    "lemma_id", "p", "x", "z", "N", "eps", "delta", "a", "b", "t",
    "re", "im", "magnitude", "claimed_bound", "ratio",
]

SCAN_FIELDS = ["p", "n_p", "exponent", "is_record"]

DECOMP_FIELDS = [
    "p", "x", "z", "n_p", "lhs", "count_form", "prime_form",
    "residual", "hypothesis_holds", "conclusion_holds",
]

VERDICT_FIELDS = ["lemma_id", "grid", "checked", "passed", "worst_ratio", "notes"]


@dataclass
class VerificationVerdict:
    """Outcome of one claim's parameter-grid run.

    passed is None for ratio-only claims (measured, never asserted); it is
    True/False only when the claim is an exact identity or inequality.
    """

    lemma_id: str
    grid: str
    checked: int = 0
    passed: bool | None = None
    worst_ratio: float | None = None
    worst_case: dict | None = None
    failures: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    fields: list | None = None  # row schema; None means the shared sum schema
    notes: str = ""

    def status(self) -> str:
        if self.passed is None:
            return "DATA"
        return "PASS" if self.passed else "FAIL"

    def summary_row(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "grid": self.grid,
            "checked": self.checked,
            "passed": "" if self.passed is None else self.passed,
            "worst_ratio": self.worst_ratio,
            "notes": self.notes,
        }

    def __str__(self) -> str:
        worst = "" if self.worst_ratio is None else f" worst_ratio={self.worst_ratio:.6g}"
        note = f" ({self.notes})" if self.notes else ""
        return f"[{self.status()}] {self.lemma_id} checked={self.checked} grid={self.grid}{worst}{note}"


def fmt_cell(v) -> str:
    """Deterministic scalar formatting for CSV cells."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return repr(v)
    return str(v)


def _jsonable(v):
    if isinstance(v, float) and (math.isinf(v) or math.isnan(v)):
        return repr(v)
    return v


def write_csv(path_or_buf, fieldnames: list[str], rows: Iterable[dict]) -> None:
    """Write rows to CSV with a mandatory header and LF endings."""
    own = isinstance(path_or_buf, (str, bytes))
    fh = open(path_or_buf, "w", newline="") if own else path_or_buf
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(fieldnames)
        for row in rows:
            w.writerow([fmt_cell(row.get(f)) for f in fieldnames])
    finally:
        if own:
            fh.close()


def write_jsonl(path_or_buf, fieldnames: list[str], rows: Iterable[dict]) -> None:
    """JSONL twin of write_csv: identical field names, one object per line."""
    own = isinstance(path_or_buf, (str, bytes))
    fh = open(path_or_buf, "w", newline="") if own else path_or_buf
    try:
        for row in rows:
            obj = {f: _jsonable(row.get(f)) for f in fieldnames}
            fh.write(json.dumps(obj) + "\n")
    finally:
        if own:
            fh.close()


def render(fieldnames: list[str], rows: Iterable[dict], fmt: str = "csv") -> str:
    """Render rows to a string in the requested format."""
    buf = io.StringIO()
    if fmt == "csv":
        write_csv(buf, fieldnames, rows)
    elif fmt == "jsonl":
        write_jsonl(buf, fieldnames, rows)
    else:
        raise ValueError(f"unknown format {fmt!r} (expected csv or jsonl)")
    return buf.getvalue()


def sum_report_row(report) -> dict:
    """Flatten a SumReport (or asymptotic report) onto the shared sum schema."""
    params = getattr(report, "params", None)
    row = {f: None for f in SUM_FIELDS}
    row["lemma_id"] = report.lemma_id
    for f in ("p", "x", "z", "N", "eps", "delta", "a", "b", "t"):
        row[f] = getattr(params, f, None)
    if hasattr(report, "value"):
        row["re"] = report.value.real
        row["im"] = report.value.imag
        row["magnitude"] = report.magnitude
        row["claimed_bound"] = report.claimed_bound
        row["ratio"] = report.ratio
    else:
        # Asymptotic reports: the "sum" column pair carries the exact value,
        # the bound column carries the predicted error scale, and the ratio
        # is the normalized residual.
        row["re"] = report.exact
        row["im"] = 0.0
        row["magnitude"] = abs(report.residual)
        row["claimed_bound"] = report.predicted_error_scale
        row["ratio"] = abs(report.normalized_residual)
    return row
