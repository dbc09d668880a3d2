"""Command-line front end.

Exit codes: 0 success, 1 fuzz failures, 2 parse/input error, 3 too many
crossings.  ``ARROWPOLY_THREADS`` sets the worker count for ``table``
(default: all available CPUs).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from . import moves
from .arrow import DEFAULT_MAX_CROSSINGS, KERNEL, TooLarge, arrow_bracket, arrow_normalized
from .colorability import criteria_verdict
from .gauss import GaussCode, GaussCodeError, parse_code, read_table, serialize, writhe
from .parity import NotAKnot, odd_writhe
from .poly import k_degree_set, print_poly

EXIT_OK, EXIT_FUZZ, EXIT_PARSE, EXIT_TOO_LARGE = 0, 1, 2, 3

CSV_COLUMNS = ["name", "writhe", "odd_writhe", "arrow_poly", "as_set", "verdict", "obstructions"]


def _threads() -> int:
    raw = os.environ.get("ARROWPOLY_THREADS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _fail(msg: str, code: int) -> int:
    print(f"arrowpoly: {msg}", file=sys.stderr)
    return code


def _parse_or_exit(text: str):
    try:
        return parse_code(text), None
    except GaussCodeError as exc:
        return None, _fail(f"{type(exc).__name__}: {exc}", EXIT_PARSE)


def cmd_arrow(args) -> int:
    code, err = _parse_or_exit(args.code)
    if err is not None:
        return err
    try:
        fn = arrow_normalized if args.normalized else arrow_bracket
        poly = fn(code, args.max_crossings)
    except TooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    if args.json:
        print(json.dumps(poly.to_json()))
    else:
        print(print_poly(poly))
    return EXIT_OK


def cmd_oddwrithe(args) -> int:
    code, err = _parse_or_exit(args.code)
    if err is not None:
        return err
    try:
        print(odd_writhe(code))
    except NotAKnot as exc:
        return _fail(f"NotAKnot: {exc}", EXIT_PARSE)
    return EXIT_OK


def cmd_colorability(args) -> int:
    code, err = _parse_or_exit(args.code)
    if err is not None:
        return err
    try:
        verdict = criteria_verdict(code, max_crossings=args.max_crossings)
    except TooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    print(json.dumps(verdict.to_json(), sort_keys=True))
    return EXIT_OK


# ------------------------------------------------------------------ table


def table_row(name: str, code: GaussCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    poly = arrow_normalized(code, max_crossings)
    verdict = criteria_verdict(code, poly)
    return {
        "name": name,
        "code": serialize(code),
        "writhe": writhe(code),
        "odd_writhe": odd_writhe(code) if code.is_knot else None,
        "arrow_poly": print_poly(poly),
        "as_set": sorted(k_degree_set(poly)),
        "verdict": verdict.to_json(),
    }


def build_report(lines: List[str], max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    entries, errors = [], []
    names = set()
    for lineno, name, text in read_table(lines):
        if name is None:
            errors.append({"line": lineno, "name": None, "message": "missing tab separator"})
            continue
        if name in names:
            errors.append({"line": lineno, "name": name, "message": "duplicate name"})
            continue
        try:
            code = parse_code(text)
        except GaussCodeError as exc:
            errors.append({"line": lineno, "name": name, "message": f"{type(exc).__name__}: {exc}"})
            continue
        if code.n_crossings > max_crossings:
            errors.append({"line": lineno, "name": name, "message": f"TooLarge: {code.n_crossings} crossings"})
            continue
        names.add(name)
        entries.append((name, code))

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        rows = list(pool.map(lambda e: table_row(e[0], e[1], max_crossings), entries))

    summary = {}
    for row in rows:
        v = row["verdict"]["verdict"]
        summary[v] = summary.get(v, 0) + 1
    return {"rows": rows, "errors": errors, "summary": dict(sorted(summary.items()))}


def _obstruction_text(verdict: dict) -> str:
    parts = []
    for o in verdict.get("obstructions", []):
        extra = o.get("summand", o.get("value"))
        parts.append(f"{o['criterion']}:{extra}")
    return ";".join(parts)


def report_to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in report["rows"]:
        writer.writerow(
            {
                "name": row["name"],
                "writhe": row["writhe"],
                "odd_writhe": "" if row["odd_writhe"] is None else row["odd_writhe"],
                "arrow_poly": row["arrow_poly"],
                "as_set": " ".join(str(x) for x in row["as_set"]),
                "verdict": row["verdict"]["verdict"],
                "obstructions": _obstruction_text(row["verdict"]),
            }
        )
    for err in report["errors"]:
        writer.writerow(
            {
                "name": err["name"] or "",
                "verdict": "Error",
                "obstructions": f"line {err['line']}: {err['message']}",
            }
        )
    return buf.getvalue()


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def cmd_table(args) -> int:
    try:
        with open(args.input) as fh:
            lines = fh.readlines()
    except OSError as exc:
        return _fail(str(exc), EXIT_PARSE)
    report = build_report(lines, args.max_crossings)
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for err in report["errors"]:
        print(f"{args.input}:{err['line']}: {err['message']}", file=sys.stderr)
    counts = ", ".join(f"{k}={v}" for k, v in report["summary"].items())
    print(f"summary: {counts or 'empty'}", file=sys.stderr)
    return EXIT_OK


# ------------------------------------------------------------------- fuzz

RII_RIII = (moves.R2_ADD, moves.R2_REMOVE, moves.R3)


def fuzz(walks: int, steps: int, max_crossings: int, seed: int, start_crossings: int = 6) -> dict:
    """Random-walk invariance check; returns a summary with failures."""
    failures = []
    rng = random.Random(seed)
    for w in range(walks):
        start = moves.random_code(rng, rng.randint(0, min(start_crossings, max_crossings)))
        bracket0 = arrow_bracket(start)
        norm0 = arrow_normalized(start)
        odd0 = odd_writhe(start)
        for q in moves.random_walk(start, steps, seed * 100003 + 2 * w, RII_RIII, max_crossings)[1:]:
            if arrow_bracket(q) != bracket0:
                failures.append({"walk": w, "kind": "RII/RIII", "start": serialize(start), "code": serialize(q)})
                break
        for q in moves.random_walk(start, steps, seed * 100003 + 2 * w + 1, moves.ALL_KINDS, max_crossings)[1:]:
            if arrow_normalized(q) != norm0 or odd_writhe(q) != odd0:
                failures.append({"walk": w, "kind": "mixed", "start": serialize(start), "code": serialize(q)})
                break
    return {"walks": walks, "steps": steps, "seed": seed, "failures": failures}


def cmd_fuzz(args) -> int:
    result = fuzz(args.walks, args.steps, args.max_crossings, args.seed)
    print(json.dumps(result, sort_keys=True))
    return EXIT_FUZZ if result["failures"] else EXIT_OK


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrowpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({KERNEL} kernel)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arrow", help="arrow polynomial of a Gauss code")
    p.add_argument("code")
    p.add_argument("--normalized", action="store_true", help="multiply by (-A^3)^(-writhe)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_arrow)

    p = sub.add_parser("oddwrithe", help="odd writhe of a knot")
    p.add_argument("code")
    p.set_defaults(func=cmd_oddwrithe)

    p = sub.add_parser("colorability", help="checkerboard colorability verdict as JSON")
    p.add_argument("code")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_colorability)

    p = sub.add_parser("table", help="batch report for a name<TAB>code file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fuzz", help="Reidemeister random-walk invariance check")
    p.add_argument("--walks", type=int, default=50)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--max-crossings", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
