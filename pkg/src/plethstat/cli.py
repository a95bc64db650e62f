"""Command line: oracle distributions, formula evaluation, verification, descent tables.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Iterable, List, Optional, Sequence

from .exactalg import MultiPoly, poly_to_json, rational_str
from .formulas import SUITE_NAMES, SuiteConfig, evaluate_formula, formula_ids, run_suite
from .permstat import EnumerationCapError, FamilySpec, Profile, check_cap, descent_table, oracle_dist
from .permstat.enumerate import ENUMERATION_CAP, HARD_LIMIT

DEFAULTS = {
    "n": None, "family": "all", "profile": "des", "id": None, "suite": "all",
    "format": "json", "unsafe_n": False, "output": None,
    "n_max": 8, "k_max": 5, "deg_max": 8, "threads": None,
}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethstat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        # defaults stay None so that flags can be told apart from --config values
        p.add_argument("--config", help="JSON file with run settings; flags override it")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--unsafe-n", action="store_true", default=None,
                       help=f"allow n up to {HARD_LIMIT} (default cap {ENUMERATION_CAP})")
        p.add_argument("--threads", type=int, default=None,
                       help="worker processes for enumeration (default: $PERMSTAT_THREADS or 1)")

    p = sub.add_parser("oracle", help="distribution polynomial by brute-force enumeration")
    p.add_argument("--n", type=int)
    p.add_argument("--family")
    p.add_argument("--profile")
    common(p)

    p = sub.add_parser("formula", help="evaluate a closed formula by id")
    p.add_argument("--id")
    p.add_argument("--n", type=int)
    p.add_argument("--family")
    common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",))
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--deg-max", type=int)
    common(p)

    p = sub.add_parser("table", help="counts of family members by descent composition")
    p.add_argument("--n", type=int)
    p.add_argument("--family")
    common(p)
    return parser


def resolve(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
        if not isinstance(loaded, dict):
            raise UsageError("config must be a JSON object")
        for key, value in loaded.items():
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {key!r}")
            cfg[key] = value
    for key, value in vars(args).items():
        if key in DEFAULTS and value is not None:
            cfg[key] = value
    for key in ("n_max", "k_max", "deg_max"):
        if not isinstance(cfg[key], int) or cfg[key] < (1 if key != "k_max" else 0):
            raise UsageError(f"{key.replace('_', '-')} must be a positive integer")
    if cfg["format"] not in ("json", "csv"):
        raise UsageError("format must be json or csv")
    return cfg


def _need_n(cfg: dict) -> int:
    n = cfg["n"]
    if n is None:
        raise UsageError("--n is required")
    return n


def _family(cfg: dict) -> FamilySpec:
    try:
        return FamilySpec.parse(cfg["family"])
    except ValueError as exc:
        raise UsageError(str(exc))


def _csv(rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _poly_rows(p: MultiPoly) -> List[List[str]]:
    names = p.variables()
    rows = [names + ["coeff"]]
    for exps, c in p.terms(names):
        rows.append([str(e) for e in exps] + [rational_str(c)])
    return rows


def _dump(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def cmd_oracle(cfg: dict) -> str:
    n = _need_n(cfg)
    family = _family(cfg)
    try:
        Profile.parse(cfg["profile"])
    except ValueError as exc:
        raise UsageError(str(exc))
    check_cap(n, cfg["unsafe_n"])
    dist = oracle_dist(n, family, cfg["profile"], unsafe=cfg["unsafe_n"])
    if cfg["format"] == "csv":
        return _csv(dist.csv_rows())
    out = {"n": n, "family": family.label()}
    out.update(dist.to_json())
    return _dump(out)


def cmd_formula(cfg: dict) -> str:
    fid = cfg["id"]
    ids = formula_ids()
    if fid not in ids:
        raise UsageError(f"unknown formula id {fid!r}; valid ids: {', '.join(ids)}")
    n = _need_n(cfg)
    _family(cfg)
    check_cap(max(n, 1), cfg["unsafe_n"])
    try:
        poly, meta = evaluate_formula(fid, n, cfg["family"])
    except ValueError as exc:
        raise UsageError(str(exc))
    if cfg["format"] == "csv":
        return _csv(_poly_rows(poly))
    meta["poly"] = poly_to_json(poly)
    return _dump(meta)


def cmd_table(cfg: dict) -> str:
    n = _need_n(cfg)
    family = _family(cfg)
    check_cap(n, cfg["unsafe_n"])
    table = descent_table(n, family, unsafe=cfg["unsafe_n"])
    if cfg["format"] == "csv":
        return _csv([["composition", "count"]] +
                    [["-".join(map(str, comp)), count] for comp, count in table.items()])
    rows = [{"composition": list(comp), "count": count} for comp, count in table.items()]
    return _dump({"n": n, "family": family.label(), "rows": rows})


def cmd_verify(cfg: dict, out) -> int:
    check_cap(cfg["n_max"], cfg["unsafe_n"])
    scfg = SuiteConfig(cfg["n_max"], cfg["k_max"], cfg["deg_max"])
    start = time.perf_counter()
    total = failed = 0
    if cfg["format"] == "csv":
        out.write(_csv([["id", "n", "k_max", "status", "witness", "ms"]]))
    for report in run_suite(cfg["suite"], scfg):
        total += 1
        failed += not report.passed
        if cfg["format"] == "csv":
            d = report.to_dict()
            out.write(_csv([["" if v is None else v for v in d.values()]]))
        else:
            out.write(report.to_json() + "\n")
        out.flush()
        if not report.passed:
            print(f"FAIL {report.id} n={report.n}: {report.witness}", file=sys.stderr)
    seconds = time.perf_counter() - start
    print(f"{cfg['suite']}: {total} checks, {total - failed} passed, {failed} failed "
          f"in {seconds:.1f} s", file=sys.stderr)
    return 1 if failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        if cfg["threads"] is not None:
            if cfg["threads"] < 1:
                raise UsageError("--threads must be at least 1")
            os.environ["PERMSTAT_THREADS"] = str(cfg["threads"])
        text = None
        if args.command != "verify":
            handler = {"oracle": cmd_oracle, "formula": cmd_formula, "table": cmd_table}[args.command]
            text = handler(cfg)
        sink = open(cfg["output"], "w") if cfg["output"] else sys.stdout
        try:
            if text is None:
                return cmd_verify(cfg, sink)
            sink.write(text)
            return 0
        finally:
            if sink is not sys.stdout:
                sink.close()
    except (UsageError, EnumerationCapError) as exc:
        print(f"plethstat: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"plethstat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
