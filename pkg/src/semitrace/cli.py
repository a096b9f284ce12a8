"""Command-line front end: ``semitrace sgp|ideal|resolve|verify|explore``.

Exit codes: 0 ok, 1 a FAIL verdict, 2 usage or parse error, 3 bound errors,
4 NotIntegral, 5 ZeroDivisorIdeal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import harness
from .errors import (BoundTooLarge, DegreeBoundTooSmall, NotIntegral, SemitraceError,
                     ZeroDivisorIdeal)
from .graded import GradedRing, minimal_resolution
from .ideals import colon, ord, parse_ideal, tau, trace
from .instance import parse_instance
from .semigroup import parse_semigroup

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND, EXIT_NOT_INTEGRAL, EXIT_ZERO_DIVISOR = range(6)


class UsageError(Exception):
    pass


def _emit(out, text=""):
    out.write(text + "\n")


def _dump_json(obj):
    return json.dumps(obj, sort_keys=True, default=harness._json_default)


# -- sgp -----------------------------------------------------------------------

def cmd_sgp(args, out):
    sgp = parse_semigroup(" ".join(args.generators))
    record = sgp.invariant_record()
    record["gaps"] = sorted(sgp.gaps)
    record["apery"] = sgp.apery_set()
    if args.json:
        _emit(out, _dump_json(record))
    else:
        for key in ("generators", "frobenius", "genus", "multiplicity", "embdim",
                    "llmon", "symmetric", "apery", "gaps"):
            _emit(out, f"{key}: {_fmt_value(record[key])}")
    return EXIT_OK


def _fmt_value(v):
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, list):
        return "[" + ",".join(map(str, v)) + "]"
    return str(v)


# -- ideal ---------------------------------------------------------------------

_IDEAL_OPS = {
    # op: (number of ideal operands, function)
    "show": (1, lambda x: x),
    "trace": (1, trace),
    "ord": (1, lambda x: x),
    "conductor": (0, None),
    "canonical": (0, None),
    "maxideal": (0, None),
    "colon": (2, colon),
    "tau": (2, tau),
    "product": (2, lambda x, y: x * y),
    "sum": (2, lambda x, y: x + y),
    "power": (1, None),
}


def cmd_ideal(args, out):
    sgp = parse_semigroup(args.semigroup)
    op = args.op
    if op not in _IDEAL_OPS:
        raise UsageError(f"unknown ideal operation {op!r}; choose from {', '.join(_IDEAL_OPS)}")
    arity, fn = _IDEAL_OPS[op]
    operands = list(args.operands)
    if op == "power":
        if len(operands) != 2 or not operands[1].isdigit():
            raise UsageError("usage: ideal -s GENS power IDEAL N")
        result = parse_ideal(sgp, operands[0]) ** int(operands[1])
    elif arity == 0:
        if operands:
            raise UsageError(f"{op} takes no operands")
        result = parse_ideal(sgp, op)
    else:
        if len(operands) != arity:
            raise UsageError(f"{op} takes {arity} ideal operand(s)")
        result = fn(*[parse_ideal(sgp, text) for text in operands])
    record = {"semigroup": str(sgp), "op": op, "exponents": list(result.exponents)}
    if args.ord or op == "ord":
        record["ord"] = ord(result)
    if args.json:
        _emit(out, _dump_json(record))
    else:
        _emit(out, f"exponents: {_fmt_value(record['exponents'])}")
        if "ord" in record:
            _emit(out, f"ord: {record['ord']}")
    return EXIT_OK


# -- resolve ---------------------------------------------------------------------

def _module_from_expr(sgp, expr):
    expr = expr.strip()
    if expr in ("residue", "k"):
        return {"kind": "residue"}
    if expr in ("free", "R"):
        return {"kind": "free", "twists": [0]}
    if expr.startswith("quotient"):
        return {"kind": "quotient",
                "exponents": list(parse_ideal(sgp, expr[len("quotient"):]).exponents)}
    return {"kind": "ideal", "exponents": list(parse_ideal(sgp, expr).exponents)}


def cmd_resolve(args, out):
    if args.semigroup and args.file and not args.module:
        args.file, args.module = None, args.file  # -s GENS EXPR
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            inst = parse_instance(fh.read())
        if not args.module:
            raise UsageError("resolve FILE needs a MODULE name")
        if args.module not in inst.modules:
            raise UsageError(f"module {args.module!r} is not defined in {args.file}")
        sgp, spec = inst.semigroup, inst.modules[args.module]
        jmax = args.jmax or inst.jmax or 3
        degree_bound = args.degree_bound or inst.degree_bound
        truncation = args.truncate or inst.truncation
        label = args.module
    else:
        if not args.semigroup:
            raise UsageError("resolve needs an instance FILE or -s GENS")
        sgp = parse_semigroup(args.semigroup)
        spec = _module_from_expr(sgp, args.module or "maxideal")
        jmax = args.jmax or 3
        degree_bound, truncation = args.degree_bound, args.truncate
        label = harness.module_label(spec)
    ring = GradedRing(sgp, truncation)
    module = harness.build_module(ring, spec, degree_bound)
    res = minimal_resolution(module, jmax, degree_bound)
    rows = res.betti_rows()
    if args.json:
        dump = res.to_json()
        dump["module"] = label
        text = _dump_json(dump)
        if args.json == "-":
            _emit(out, text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            _write_betti_csv(fh, rows)
    if args.json != "-":
        _emit(out, f"module {label} over {sgp}" +
              (f" truncated at {truncation}" if truncation else ""))
        _emit(out, "betti: " + ",".join(str(b) for _, b, _ in rows))
        _write_betti_csv(out, rows)
    return EXIT_OK


def _write_betti_csv(fh, rows):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["j", "beta_j", "max_syzygy_degree"])
    for j, beta, top in rows:
        writer.writerow([j, beta, "" if top is None else top])


# -- verify ----------------------------------------------------------------------

def cmd_verify(args, out):
    cfg = harness.SweepConfig(genus_max=args.genus_max, samples=args.samples,
                              seed=args.seed, a_max=args.a_max,
                              multiplicity_max=args.multiplicity_max, jmax=args.jmax,
                              degree_bound=args.degree_bound)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            inst = parse_instance(fh.read())
        tasks = [(sid, data) for sid, data in inst.checks
                 if sid in harness.select_statements(args.pattern)]
        if not tasks:
            raise UsageError(f"no check in {args.file} matches {args.pattern!r}")
        reports = (harness.run_instance_safe(sid, data) for sid, data in tasks)
    else:
        ids = harness.select_statements(args.pattern)
        if not ids:
            raise UsageError(f"no statement matches {args.pattern!r}; known: "
                             + ", ".join(harness.STATEMENTS))
        reports = harness.run_sweep(ids, cfg, workers=args.workers)
    return _write_reports(reports, args, out)


def _write_reports(reports, args, out):
    """Single writer: reports are consumed in task order and flushed as they arrive."""
    jsonl = open(args.jsonl, "w", encoding="utf-8") if args.jsonl else None
    csv_fh = open(args.csv, "w", encoding="utf-8", newline="") if args.csv else None
    writer = None
    if csv_fh:
        writer = csv.writer(csv_fh, lineterminator="\n")
        writer.writerow(["statement_id", "instance", "verdict", "bound"])
    counts = {}
    try:
        for report in reports:
            line = report.dumps()
            if jsonl:
                jsonl.write(line + "\n")
                jsonl.flush()
            elif args.json:
                _emit(out, line)
            if writer:
                bound = report.bound
                writer.writerow([report.statement_id,
                                 json.dumps(report.instance, sort_keys=True),
                                 report.verdict, "" if bound is None else bound])
            tally = counts.setdefault(report.statement_id, {})
            tally[report.verdict] = tally.get(report.verdict, 0) + 1
    finally:
        if jsonl:
            jsonl.close()
        if csv_fh:
            csv_fh.close()
    if not args.json or args.jsonl:
        _emit(out, "statement_id,PASS,FAIL,HYPOTHESIS_FAILED,SKIPPED")
        for sid, tally in counts.items():
            _emit(out, ",".join([sid] + [str(tally.get(v, 0)) for v in (
                harness.PASS, harness.FAIL, harness.HYPOTHESIS_FAILED, harness.SKIPPED)]))
    failed = any(t.get(harness.FAIL) for t in counts.values())
    return EXIT_FAIL if failed else EXIT_OK


# -- explore ---------------------------------------------------------------------

def cmd_explore(args, out):
    if args.question == "hyp":
        report = harness.explore_question_hyp(args.a_max)
        columns = ["semigroup", "e", "ord_conductor", "verdict"]
    else:
        report = harness.explore_question_qu2(args.multiplicity_max, args.genus_max)
        columns = ["semigroup", "e", "mu", "frobenius", "ord_conductor",
                   "ord_by_powers", "flag"]
    table = report.witnesses.get("table", [])
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            _write_table(fh, columns, table)
    if args.json:
        _emit(out, report.dumps())
    else:
        _write_table(out, columns, table)
        _emit(out, f"# verdict: {report.verdict}")
        if args.question == "qu2":
            flagged = report.witnesses.get("flagged", [])
            _emit(out, f"# rows: {len(table)}, ord(c) != 2: {len(flagged)}")
    return EXIT_FAIL if report.verdict == harness.FAIL else EXIT_OK


def _write_table(fh, columns, rows):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_value(row[c]) if isinstance(row[c], bool) else row[c]
                         for c in columns])


# -- entry point -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="semitrace",
                                     description="Trace ideals over numerical semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sgp", help="semigroup invariants")
    p.add_argument("generators", nargs="+", help="generators, e.g. 3 5 or '<3,5>'")
    p.add_argument("--json", action="store_true", help="emit one JSON record")
    p.set_defaults(func=cmd_sgp)

    p = sub.add_parser("ideal", help="monomial ideal arithmetic")
    p.add_argument("-s", "--semigroup", required=True, help="generators, e.g. 3,5")
    p.add_argument("op", help="|".join(_IDEAL_OPS))
    p.add_argument("operands", nargs="*", help="ideals: [3,5] or conductor/canonical/maxideal/R")
    p.add_argument("--ord", action="store_true", help="also report the m-adic order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("resolve", help="minimal graded free resolution")
    p.add_argument("file", nargs="?", help="instance file")
    p.add_argument("module", nargs="?", help="module name in the file, or an expression with -s")
    p.add_argument("-s", "--semigroup")
    p.add_argument("--jmax", type=_positive)
    p.add_argument("--degree-bound", type=_positive)
    p.add_argument("--truncate", type=_positive)
    p.add_argument("--json", nargs="?", const="-", metavar="PATH",
                   help="resolution dump (stdout when PATH is omitted)")
    p.add_argument("--csv", metavar="PATH", help="Betti table")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("verify", help="run statement checks")
    p.add_argument("pattern", help="statement id glob, e.g. 'check-*' or prop-nuco")
    p.add_argument("--file", help="run the checks declared in an instance file")
    p.add_argument("--genus-max", type=_nonnegative, default=4)
    p.add_argument("--samples", type=_nonnegative, default=3, help="random ideals per semigroup")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a-max", type=_positive, default=9)
    p.add_argument("--multiplicity-max", type=_positive, default=8)
    p.add_argument("--jmax", type=_positive, default=2)
    p.add_argument("--degree-bound", type=_positive)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--json", action="store_true", help="JSON-lines reports on stdout")
    p.add_argument("--jsonl", metavar="PATH", help="JSON-lines reports to a file")
    p.add_argument("--csv", metavar="PATH", help="aggregated CSV")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="open-question explorers (report only)")
    p.add_argument("question", choices=["hyp", "qu2"])
    p.add_argument("--a-max", type=_positive, default=7)
    p.add_argument("--multiplicity-max", type=_positive, default=8)
    p.add_argument("--genus-max", type=_nonnegative, default=8)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_explore)
    return parser


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"semitrace: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegreeBoundTooSmall as exc:
        print(f"semitrace: DegreeBoundTooSmall: {exc} (try --degree-bound {exc.suggested})",
              file=sys.stderr)
        return EXIT_BOUND
    except BoundTooLarge as exc:
        print(f"semitrace: BoundTooLarge: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except NotIntegral as exc:
        print(f"semitrace: NotIntegral: {exc}", file=sys.stderr)
        return EXIT_NOT_INTEGRAL
    except ZeroDivisorIdeal as exc:
        print(f"semitrace: ZeroDivisorIdeal: {exc}", file=sys.stderr)
        return EXIT_ZERO_DIVISOR
    except (SemitraceError, ValueError, OSError) as exc:
        print(f"semitrace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
