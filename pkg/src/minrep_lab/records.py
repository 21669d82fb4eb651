"""Verification records and their canonical serializations.

A record captures one check outcome.  The pass invariant is structural:

    passed  <=>  (mode == "exact" and max_abs_err == 0)
              or (mode == "numeric" and max_abs_err <= tolerance)

Reports must be byte-identical across runs with the same configuration and
seed, so ``runtime_ms`` is pinned to 0 (determinism beats timing trivia) and
records are emitted in a canonical order independent of execution order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["VerificationRecord", "records_json", "records_csv", "records_md",
           "render", "sort_records"]

_FIELDS = ["check_id", "family", "params", "mode", "max_abs_err",
           "tolerance", "passed", "runtime_ms", "seed", "detail"]


@dataclass(frozen=True)
class VerificationRecord:
    check_id: str
    family: str
    params: dict
    mode: str                  # "exact" | "numeric"
    max_abs_err: float
    tolerance: float
    passed: bool
    runtime_ms: int = 0
    seed: int = 0
    detail: str = ""

    def __post_init__(self):
        if self.mode not in ("exact", "numeric"):
            raise ValueError(f"unknown mode {self.mode!r}")
        expect = (self.max_abs_err == 0.0 if self.mode == "exact"
                  else self.max_abs_err <= self.tolerance)
        if self.passed != expect:
            raise ValueError("record violates the pass invariant: "
                             f"{self.check_id} mode={self.mode} "
                             f"err={self.max_abs_err} tol={self.tolerance} "
                             f"passed={self.passed}")

    @staticmethod
    def exact(check_id: str, family: str, params: dict, failures,
              seed: int = 0, detail: str = "") -> "VerificationRecord":
        """Exact-arithmetic check: ``failures`` is a list (empty = pass); a
        failing exact check reports the failure count as the error."""
        count = len(failures)
        if count and not detail:
            detail = f"failures: {failures[:6]!r}"
        return VerificationRecord(check_id, family, dict(params), "exact",
                                  float(count), 0.0, count == 0,
                                  seed=seed, detail=detail)

    @staticmethod
    def numeric(check_id: str, family: str, params: dict, err: float,
                tol: float, seed: int = 0,
                detail: str = "") -> "VerificationRecord":
        err = float(err)
        return VerificationRecord(check_id, family, dict(params), "numeric",
                                  err, float(tol), err <= tol,
                                  seed=seed, detail=detail)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in _FIELDS}


def _sort_key(r: VerificationRecord):
    return (r.check_id, r.family, json.dumps(r.params, sort_keys=True))


def sort_records(records) -> list:
    return sorted(records, key=_sort_key)


def records_json(records) -> str:
    rows = [r.to_dict() for r in sort_records(records)]
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"


def _flat_params(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def records_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_FIELDS)
    for r in sort_records(records):
        row = r.to_dict()
        row["params"] = _flat_params(row["params"])
        row["passed"] = "true" if row["passed"] else "false"
        w.writerow([row[k] for k in _FIELDS])
    return buf.getvalue()


def records_md(records) -> str:
    headers = ["check_id", "family", "params", "mode", "max_abs_err",
               "tolerance", "pass"]
    rows = []
    for r in sort_records(records):
        rows.append([r.check_id, r.family, _flat_params(r.params), r.mode,
                     f"{r.max_abs_err:.3g}", f"{r.tolerance:.3g}",
                     "pass" if r.passed else "FAIL"])
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    out = []
    out.append("| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |")
    out.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for row in rows:
        out.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
    return "\n".join(out) + "\n"


def render(records, fmt: str) -> str:
    if fmt == "json":
        return records_json(records)
    if fmt == "csv":
        return records_csv(records)
    if fmt == "md":
        return records_md(records)
    raise ValueError(f"unknown format {fmt!r}")
