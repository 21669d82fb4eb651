"""Command-line interface: tables, verification suites, special functions.

Four subcommands:

* ``constants`` — structure-constant rows with their Lie algebra labels,
  validated against the embedded fixtures;
* ``verify`` — run a named suite and emit verification records;
* ``special`` — sample an eigenprofile against the normalized Bessel
  function on a grid, as CSV;
* ``dims`` — the minimal-orbit dimension cross-check.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or
configuration error.  Reports are byte-identical for identical
configuration and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from fractions import Fraction

from .algebras import constants, family_names
from .kbessel import ktilde
from .radial import dtilde_eigenvalue, lambda_hat_profiles
from .records import render
from .suites import (SUITE_ORDER, SUITES, RunConfig, _TABLE_ROWS,
                     _TABLE_ROWS_BY_FAMILY, _dtilde_differentiated, run_suite)

__all__ = ["main"]


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# family-name parsing: "Sym(3,R)" -> ("Sym(k,R)", (3,))
# ---------------------------------------------------------------------------

_PATTERNS = [
    (re.compile(r"Sym\((\d+),R\)\Z"), lambda m: ("Sym(k,R)", (int(m[1]),))),
    (re.compile(r"Sym\((\d+),C\)\Z"), lambda m: ("Sym(k,C)", (int(m[1]),))),
    (re.compile(r"Herm\((\d+),C\)\Z"), lambda m: ("Herm(k,C)", (int(m[1]),))),
    (re.compile(r"Herm\((\d+),H\)\Z"), lambda m: ("Herm(k,H)", (int(m[1]),))),
    (re.compile(r"M\((\d+),R\)\Z"), lambda m: ("M(k,R)", (int(m[1]),))),
    (re.compile(r"M\((\d+),C\)\Z"), lambda m: ("M(k,C)", (int(m[1]),))),
    (re.compile(r"M\((\d+),H\)\Z"), lambda m: ("M(k,H)", (int(m[1]),))),
    (re.compile(r"C\^(\d+)\Z"), lambda m: ("C^k", (int(m[1]),))),
]


def _parse_concrete(text: str):
    t = text.strip()
    if t == "R":
        return ("R", ())
    if t in ("Herm(3,O)", "Herm(3,Os)", "Herm(3,O)xC"):
        return (t, ())
    for pat, mk in _PATTERNS:
        m = pat.match(t)
        if m:
            return mk(m)
    m = re.match(r"Skew\((\d+),(R|C)\)\Z", t)
    if m:
        size = int(m[1])
        if size % 2:
            raise UsageError(f"skew-symmetric size must be even: {t!r}")
        key = "Skew(2k,R)" if m[2] == "R" else "Skew(2k,C)"
        return (key, (size // 2,))
    m = re.match(r"Sym\((\d+),C\)&M\((\d+),H\)\Z", t)
    if m:
        if int(m[1]) != 2 * int(m[2]):
            raise UsageError(f"mismatched sizes in {t!r}")
        return ("Sym(2k,C)&M(k,H)", (int(m[2]),))
    m = re.match(r"R\((\d+),(\d+)\)\Z", t)
    if m:
        p, q = int(m[1]), int(m[2])
        if p == 1:
            return ("R(1,k-1)", (q + 1,))
        if q == 0:
            return ("R(k,0)", (p,))
        return ("R(p,q)", (p, q))
    raise UsageError(f"unknown family {text!r}")


def parse_family_token(text: str) -> str:
    """Normalize a family argument to a filter token.

    A registry key (``Sym(k,R)``) selects the whole family; a concrete
    instance (``Sym(3,R)``, ``R(2,3)``) selects one row.
    """
    t = text.strip()
    if t in family_names():
        return t
    fam, params = _parse_concrete(t)
    try:
        return str(constants(fam, *params))
    except ValueError as exc:
        raise UsageError(str(exc))


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

_CONST_FIELDS = ["family", "n", "r", "d", "e", "n0", "r0", "d0", "nu", "mu",
                 "lambda1", "g", "dim_g", "k", "l", "kl"]

_FIXTURES = {(fam, params): want for fam, params, want in _TABLE_ROWS}


def _const_row(fam: str, params: tuple) -> dict:
    C = constants(fam, *params)
    row = {
        "family": str(C),
        "n": C.n, "r": C.r, "d": C.d, "e": C.e,
        "n0": C.n0, "r0": C.r0, "d0": C.d0,
        "nu": C.nu, "mu": str(C.mu), "lambda1": str(C.lambda1),
        "g": C.lie["g"][0], "dim_g": C.lie["g"][1],
        "k": C.lie["k"][0], "l": C.lie["l"][0], "kl": C.lie["kl"][0],
    }
    want = _FIXTURES.get((fam, params))
    if want is not None:
        for key, val in want.items():
            if key == "g":
                got = (row["g"], row["dim_g"])
                if got != tuple(val):
                    raise RuntimeError(
                        f"fixture mismatch for {row['family']}: g {got} != {val}")
            elif Fraction(getattr(C, key)) != Fraction(val):
                raise RuntimeError(
                    f"fixture mismatch for {row['family']}: "
                    f"{key} {getattr(C, key)} != {val}")
    return row


def _render_table(rows: list, fields: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        for row in rows:
            w.writerow([row[k] for k in fields])
        return buf.getvalue()
    if fmt == "md":
        cells = [[str(row[k]) for k in fields] for row in rows]
        widths = [max(len(f), *(len(c[i]) for c in cells)) if cells else len(f)
                  for i, f in enumerate(fields)]
        out = ["| " + " | ".join(f.ljust(w) for f, w in zip(fields, widths)) + " |",
               "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
        for c in cells:
            out.append("| " + " | ".join(v.ljust(w) for v, w in zip(c, widths)) + " |")
        return "\n".join(out) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def cmd_constants(args) -> int:
    if args.family == "all":
        jobs = [(fam, _TABLE_ROWS_BY_FAMILY[fam]) for fam in family_names()]
    else:
        jobs = [_parse_concrete(args.family)]
    rows = []
    for fam, params in jobs:
        try:
            rows.append(_const_row(fam, params))
        except ValueError as exc:
            raise UsageError(str(exc))
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    text = _render_table(rows, _CONST_FIELDS, args.format)
    return _emit(text, args, "constants", 0)


# ---------------------------------------------------------------------------
# verify / dims
# ---------------------------------------------------------------------------

def _config_from_args(args) -> RunConfig:
    return RunConfig(tol_profile=args.tol_profile, seed=args.seed,
                     jmax=args.jmax, kmax=args.kmax,
                     families=tuple(parse_family_token(f)
                                    for f in (args.family or [])))


def cmd_verify(args) -> int:
    if args.suite not in SUITES and args.suite != "all":
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from "
            f"{', '.join(SUITE_ORDER + ['all'])}")
    cfg = _config_from_args(args)
    records = run_suite(args.suite, cfg)
    text = render(records, args.format)
    rc = 0 if all(r.passed for r in records) else 1
    return _emit(text, args, f"verify_{args.suite}", rc)


def cmd_dims(args) -> int:
    cfg = _config_from_args(args)
    records = run_suite("dims", cfg)
    text = render(records, args.format)
    rc = 0 if all(r.passed for r in records) else 1
    return _emit(text, args, "dims", rc)


# ---------------------------------------------------------------------------
# special
# ---------------------------------------------------------------------------

def cmd_special(args) -> int:
    try:
        alpha = Fraction(args.alpha)
        beta = Fraction(args.beta)
    except ValueError:
        raise UsageError("alpha and beta must be rational numbers")
    j = args.j
    if j < 0:
        raise UsageError("j must be nonnegative")
    grid = []
    if args.grid.strip():
        try:
            grid = [float(v) for v in args.grid.split(",")]
        except ValueError:
            raise UsageError(f"bad grid {args.grid!r}")
        if any(s <= 0 for s in grid):
            raise UsageError("grid points must be positive")

    try:
        prof = lambda_hat_profiles(alpha, beta, j)[j]
        gam = math.gamma(float(alpha) / 2 + 1)
        eig = float(dtilde_eigenvalue(alpha, j))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", f"Lambda_{j}(s)", "ktilde_beta2(s)", "residual"])
        for s in grid:
            val = prof.eval(s) / gam
            kt = float(ktilde(float(beta) / 2, s))
            res = abs(_dtilde_differentiated(alpha, beta, prof, s) / gam
                      - eig * val)
            w.writerow([repr(s), repr(val), repr(kt), repr(res)])
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return _emit(buf.getvalue(), args, "special", 0, ext="csv")


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _emit(text: str, args, stem: str, rc: int, ext: str = None) -> int:
    out_dir = args.out or os.environ.get("MINREP_LAB_OUT")
    if out_dir:
        ext = ext or {"json": "json", "csv": "csv", "md": "md"}[args.format]
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, f"{stem}.{ext}")
        with open(path, "w") as fh:
            fh.write(text)
        print(path)
    else:
        sys.stdout.write(text)
    return rc


def _read_config_file(path: str) -> dict:
    """Flat key=value file; '#' starts a comment."""
    allowed = {"seed", "jmax", "kmax", "tol-profile", "format", "out",
               "family"}
    out = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value")
                key, val = (part.strip() for part in line.split("=", 1))
                if key not in allowed:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                out[key] = val
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}")
    return out


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="minrep-lab",
        description="verification workbench for minimal representations "
                    "built from Jordan-algebra data")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="flat key=value configuration file")
        sp.add_argument("--format", choices=("json", "csv", "md"),
                        default=None)
        sp.add_argument("--out", default=None,
                        help="write the report into this directory")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--jmax", type=int, default=None)
        sp.add_argument("--kmax", type=int, default=None)
        sp.add_argument("--tol-profile", choices=("default", "strict"),
                        default=None, dest="tol_profile")
        sp.add_argument("--family", action="append", default=None,
                        help="restrict to one family (repeatable)")

    sp = sub.add_parser("constants", help="structure-constant table")
    sp.add_argument("family", nargs="?", default="all")
    common(sp)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite")
    common(sp)

    sp = sub.add_parser("special", help="eigenprofile sampled on a grid")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    sp.add_argument("j", type=int)
    sp.add_argument("--grid", default="0.5,1.0,2.0,5.0",
                    help="comma-separated sample points (may be empty)")
    common(sp)

    sp = sub.add_parser("dims", help="minimal orbit dimension report")
    common(sp)
    return p


_DEFAULTS = {"seed": 7, "jmax": 4, "kmax": 3, "tol_profile": "default",
             "format": "json", "out": None, "family": None}


def _apply_config(args) -> None:
    file_cfg = _read_config_file(args.config) if args.config else {}
    for key, default in _DEFAULTS.items():
        if getattr(args, key, None) is not None:
            continue
        file_key = key.replace("_", "-")
        if file_key in file_cfg:
            raw = file_cfg[file_key]
            if key in ("seed", "jmax", "kmax"):
                try:
                    raw = int(raw)
                except ValueError:
                    raise UsageError(f"config {file_key} must be an integer")
            elif key == "family":
                raw = [v.strip() for v in raw.split(",") if v.strip()]
            elif key == "tol_profile" and raw not in ("default", "strict"):
                raise UsageError("config tol-profile must be default|strict")
            elif key == "format" and raw not in ("json", "csv", "md"):
                raise UsageError("config format must be json|csv|md")
            setattr(args, key, raw)
        else:
            setattr(args, key, default)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        if args.command == "constants":
            return cmd_constants(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "special":
            return cmd_special(args)
        if args.command == "dims":
            return cmd_dims(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
