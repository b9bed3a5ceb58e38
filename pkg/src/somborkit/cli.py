"""Command-line entry point: ``somborkit <command> ...``.

Exit status is 0 on success, 1 when a certification fails (a bound or lemma
is contradicted), 2 on bad arguments or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import oracle
from .extremal import (
    FamilySpec,
    admissible_bridge_counts,
    build_family,
    f_value,
    max_connectivity_bound,
    min_bridges_bound,
)
from .formats import ParseError, iter_graphs, to_graph6
from .graph import MAX_ORDER
from .invariants import STRICT_MARGIN, sombor
from .transforms import KINDS, lemma_trials

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("somborkit")


class UsageError(Exception):
    pass


def _num(x: float | None) -> str:
    return "" if x is None else f"{x:.9f}"


def _emit_csv(rows: list[dict], fields: list[str], out) -> None:
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


# -- compute --------------------------------------------------------------
def cmd_compute(args, out) -> int:
    text = Path(args.input).read_text() if args.input != "-" else sys.stdin.read()
    rows = []
    for i, g in enumerate(iter_graphs(text, args.input_format)):
        rows.append({"index": i, "n": g.order, "m": g.size, "sombor": sombor(g)})
    if args.format == "json":
        for r in rows:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    elif args.format == "csv":
        _emit_csv([{**r, "sombor": _num(r["sombor"])} for r in rows], ["index", "n", "m", "sombor"], out)
    else:
        for r in rows:
            out.write(f"{r['index']} {r['n']} {r['m']} {_num(r['sombor'])}\n")
    return EXIT_OK


# -- family ---------------------------------------------------------------
def cmd_family(args, out) -> int:
    n, k = args.n, args.k
    if args.kind == "pnk":
        spec = FamilySpec("pendant_cycle", n, k)
        bound = min_bridges_bound(n, k)
    else:
        k1, k2 = args.k1, args.k2
        if k < n - 1 and k1 is None and k2 is None:
            k1, k2 = n - k - 1, 1
        spec = FamilySpec("split_join", n, k, k1, k2)
        bound = max_connectivity_bound(n, k) if k == n - 1 else f_value(n, k, k1, k2)
    g = build_family(spec)
    row = {"graph6": to_graph6(g), "n": n, "m": g.size, "sombor": sombor(g), "closed_form": bound}
    if args.format == "json":
        out.write(json.dumps(row, sort_keys=True) + "\n")
    elif args.format == "csv":
        _emit_csv([{**row, "sombor": _num(row["sombor"]), "closed_form": _num(bound)}], list(row), out)
    else:
        out.write(f"graph6 {row['graph6']}\nsombor {_num(row['sombor'])}\nclosed_form {_num(bound)}\n")
    return EXIT_OK


# -- verify ---------------------------------------------------------------
def _report_text(rep: oracle.VerificationReport) -> str:
    return (
        f"{rep.class_kind} n={rep.n} k={rep.k} {rep.direction} status={rep.status} "
        f"achieved={_num(rep.achieved_value) or '-'} bound={_num(rep.bound_value) or '-'} "
        f"class_size={rep.class_size} family_match={rep.family_match} "
        f"witnesses={','.join(rep.witness_graphs) or '-'}"
    )


def _emit_reports(reports: list[oracle.VerificationReport], args, out) -> int:
    if args.out:
        oracle.write_reports(reports, args.out)
    if args.format == "json":
        for rep in reports:
            out.write(rep.to_json() + "\n")
    elif args.format == "csv":
        _emit_csv([oracle.summary_row(r) for r in reports], oracle.SUMMARY_FIELDS, out)
    else:
        for rep in reports:
            out.write(_report_text(rep) + "\n")
    return EXIT_MISMATCH if any(r.status == "mismatch" for r in reports) else EXIT_OK


def _k_values(args, default: list[int]) -> list[int]:
    return default if args.k is None else [args.k]


def cmd_verify(args, out) -> int:
    par = oracle.resolve_parallelism(args.parallelism)
    if args.target == "lemma":
        return _verify_lemma(args, out)
    if args.n is None:
        raise UsageError(f"verify {args.target} needs --n")
    n = args.n
    if args.target == "bridges":
        reps = [oracle.verify_min_bridges(n, k, par) for k in _k_values(args, list(range(n)))]
        return _emit_reports(reps, args, out)
    if args.target == "connectivity":
        reps = [oracle.verify_max_connectivity(n, k, par) for k in _k_values(args, list(range(1, n)))]
        return _emit_reports(reps, args, out)
    # unique-cycle
    ks = _k_values(args, list(range(n - 1)))
    results = [(k, oracle.verify_unique_cycle_lemma(n, k, par)) for k in ks]
    for k, ok in results:
        if args.format == "json":
            out.write(json.dumps({"n": n, "k": k, "holds": ok}, sort_keys=True) + "\n")
        else:
            out.write(f"unique-cycle n={n} k={k} {'holds' if ok else 'FAILS'}\n")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_MISMATCH


def _verify_lemma(args, out) -> int:
    if args.name is None:
        raise UsageError("verify lemma needs --name")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    records = lemma_trials(args.name, args.trials, args.seed)
    if args.format == "csv":
        fields = ["trial", "operation", "n", "host_so", "result_so", "margin"]
        _emit_csv([{f: _num(r[f]) if isinstance(r[f], float) else r[f] for f in fields} for r in records], fields, out)
    else:
        for r in records:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    bad = [r for r in records if not r["margin"] > STRICT_MARGIN]
    log.info("%s: %d/%d strict decreases", args.name, len(records) - len(bad), len(records))
    return EXIT_MISMATCH if bad else EXIT_OK


# -- bounds ---------------------------------------------------------------
BOUND_FIELDS = ["n", "k", "min_bridges_bound", "max_connectivity_bound"]


def bound_rows(n_max: int) -> list[dict]:
    if not 3 <= n_max <= MAX_ORDER:
        raise UsageError(f"--n-max must be in 3..{MAX_ORDER}, got {n_max}")
    rows = []
    for n in range(3, n_max + 1):
        bridge_ks = set(admissible_bridge_counts(n))
        for k in range(n):
            lo = min_bridges_bound(n, k) if k in bridge_ks else None
            hi = max_connectivity_bound(n, k) if k >= 1 else None
            rows.append({"n": n, "k": k, "min_bridges_bound": lo, "max_connectivity_bound": hi})
    return rows


def cmd_bounds(args, out) -> int:
    rows = bound_rows(args.n_max)
    if args.format == "json":
        for r in rows:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    else:
        fmt = [{**r, "min_bridges_bound": _num(r["min_bridges_bound"]),
                "max_connectivity_bound": _num(r["max_connectivity_bound"])} for r in rows]
        _emit_csv(fmt, BOUND_FIELDS, out)
    return EXIT_OK


# -- scan / enumerate -----------------------------------------------------
def cmd_scan(args, out) -> int:
    rep = oracle.extremal_scan(args.n, args.class_kind, args.k, args.direction, oracle.resolve_parallelism(args.parallelism))
    return _emit_reports([rep], args, out)


def cmd_enumerate(args, out) -> int:
    for g in oracle.enumerate_connected(args.n):
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="somborkit", description="Sombor index computation and certification.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("compute", help="Sombor index of every graph in a file")
    sp.add_argument("input", help="graph6 or edge-list file, '-' for stdin")
    sp.add_argument("--input-format", choices=("auto", "graph6", "edgelist"), default="auto")
    fmt(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("family", help="build an extremal family member")
    sp.add_argument("kind", choices=("pnk", "split"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--k1", type=int)
    sp.add_argument("--k2", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("verify", help="certify a bound or lemma")
    sp.add_argument("target", choices=("bridges", "connectivity", "lemma", "unique-cycle"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int, help="single class; all classes when omitted")
    sp.add_argument("--name", choices=KINDS)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="directory for JSON reports and summary.csv")
    sp.add_argument("--parallelism", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bounds", help="CSV table of closed-form bounds")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("scan", help="exploratory extremal scan of one class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--class", dest="class_kind", choices=oracle.CLASS_KINDS, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--direction", choices=("min", "max"), required=True)
    sp.add_argument("--out")
    sp.add_argument("--parallelism", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("enumerate", help="emit every labeled connected graph as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"somborkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout; used by tests."""
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
