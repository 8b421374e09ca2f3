"""linarr command line.

Usage:
    linarr analyze FILE [--json OUT] [--dims KMAX]
    linarr corpus
    linarr search --d 5..7 --samples 200 --seed 0 [--pencils 3,2] [--max-coeff 10] [--jobs 1]
    linarr bounds-table --d 7

Exit codes: 0 all checks pass or are skipped, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .arrangement import ArrangementError, parse
from .corpus import run_corpus, terao_rows
from .invariants import Report, verify_all
from .search import SearchConfig, run_search

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def format_report(rep: Report) -> str:
    cls = rep.classification
    lines = [
        f"d={rep.d}  mdr={rep.r}  m={rep.m}  n={rep.n}  tau={rep.tau}",
        f"lattice: {rep.lattice_type}  {rep.lattice.fingerprint}",
        f"class: {cls.kind}" + (f" exponents {cls.exponents}" if cls.exponents else "")
        + f"  nu={cls.nu} ({cls.branch})",
        "ar dims: " + " ".join(f"{k}:{v}" for k, v in rep.ar_dims.items()),
    ]
    for c in rep.checks:
        rel = f"{c.lhs} {c.relation} {c.rhs}" if c.status != "SKIPPED" else c.note
        lines.append(f"  [{c.status:7}] {c.name}: {rel}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            C = parse(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArrangementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if C.d < 3:
        print("error: analysis needs at least 3 lines", file=sys.stderr)
        return EXIT_INPUT
    rep = verify_all(C, dims_upto=args.dims)
    payload = _dump(rep.to_dict())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        print(format_report(rep))
    else:
        print(payload)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_corpus(args) -> int:
    items, failures = run_corpus()
    for e in items:
        rep = e.report
        status = "ok" if not e.mismatches else "MISMATCH"
        print(f"{e.name:18} d={rep.d} r={rep.r} m={rep.m} n={rep.n} tau={rep.tau} "
              f"tau'={rep.bounds.tau_prime_min} tau''={rep.bounds.tau_dprime_min} "
              f"{rep.classification.kind} {status}")
    for row in terao_rows():
        print(f"terao d={row['d']}: certified for {row['certified_r']} (old bound r <= {row['old_bound']})")
    for f in failures:
        print(f"FAIL {f}")
    print("corpus: all expectations met" if not failures else f"corpus: {len(failures)} failures")
    return EXIT_OK if not failures else EXIT_FAIL


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _parse_pencils(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m1[,m2], got {text!r}") from None
    if not 1 <= len(sizes) <= 2 or min(sizes) < 2:
        raise argparse.ArgumentTypeError("one or two pencil sizes, each at least 2")
    return sizes


def cmd_search(args) -> int:
    d_min, d_max = args.d
    if d_min < 3 or d_max < d_min:
        print("error: need 3 <= d_min <= d_max", file=sys.stderr)
        return EXIT_INPUT
    if args.pencils and sum(args.pencils) > d_min:
        print("error: planted pencils exceed the smallest d", file=sys.stderr)
        return EXIT_INPUT
    config = SearchConfig(d_min, d_max, args.samples, args.seed, args.pencils, args.max_coeff)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    violations = 0
    try:
        for row in run_search(config, jobs=args.jobs):
            violations += len(row["violations"])
            out.write(json.dumps(row, sort_keys=True) + "\n")
        out.write(json.dumps({"samples": args.samples, "seed": args.seed,
                              "violations": violations}, sort_keys=True) + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK if violations == 0 else EXIT_FAIL


def cmd_bounds_table(args) -> int:
    d = args.d
    if d < 4:
        print("error: bounds-table needs d >= 4", file=sys.stderr)
        return EXIT_INPUT
    header = ("r", "tau_min", "tau_max", "refined", "tau'(n=2)", "tau'(n=3)")
    print(f"{header[0]:>3} {header[1]:>8} {header[2]:>8} {header[3]:>8} {header[4]:>10} {header[5]:>10}")
    for r in range(1, d):
        refined = bounds.tau_max_refined(d, r) if 2 * r > d - 1 else "-"
        tp2 = bounds.tau_prime_min(d, r, 2) if r >= 2 else "-"
        tp3 = bounds.tau_prime_min(d, r, 3) if r >= 2 else "-"
        print(f"{r:>3} {bounds.tau_min(d, r):>8} {bounds.tau_max(d, r):>8} {refined:>8} {tp2:>10} {tp3:>10}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linarr", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one arrangement file")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT", help="write the JSON report here and print a table")
    p.add_argument("--dims", type=int, metavar="KMAX", help="graded dimensions up to KMAX (default d-2)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="run the built-in example corpus")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("search", help="seeded random scan of the lower bounds")
    p.add_argument("--d", type=_parse_range, default=(5, 7), metavar="MIN..MAX")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pencils", type=_parse_pencils, default=None, metavar="M1[,M2]")
    p.add_argument("--max-coeff", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds-table", help="closed-form bounds for every r at fixed d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bounds_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
