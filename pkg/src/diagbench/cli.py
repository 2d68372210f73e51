"""Command-line front end over the diagonal, subsets, density, and chains modules.

Output is byte-deterministic for a fixed argument list (including --seed):
JSON with two-space indent, CSV with a header row and "\n" line endings,
rationals rendered as "p/q".  Exit codes: 0 success, 2 usage or domain error,
1 internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import chains, density, diagonal, subsets
from .eps import EventuallyPeriodicString
from .errors import WorkbenchError


def _frac(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    sink = io.StringIO()
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return sink.getvalue()


def _bool(flag) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------- diagonal

def _read_rows(path):
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]


def _explicit_antidiagonal(spec) -> str:
    rows = spec.rows
    square = min(len(rows), len(rows[0]))
    policy = (
        diagonal.FlipPolicy.BINARY if spec.radix == 2 else diagonal.FlipPolicy.DECIMAL
    )
    return diagonal.antidiagonal_finite(rows[:square], policy)


def _parse_candidate(text, spec):
    if text is None:
        if spec.is_family:
            return diagonal.antidiagonal_rule(spec)
        return _explicit_antidiagonal(spec)
    if "(" in text:
        return EventuallyPeriodicString.parse(text, spec.radix)
    return text


def _cmd_diagonal(args):
    if args.explicit:
        spec = diagonal.ArraySpec.explicit(_read_rows(args.explicit))
    else:
        anti = None
        if args.antidiag is not None:
            anti = EventuallyPeriodicString.parse(args.antidiag, 10)
        spec = diagonal.ArraySpec.family(
            diagonal.Family(args.family),
            seed=args.seed,
            antidiag_digits=anti,
            randomize_subdiagonal=args.randomize_subdiagonal,
        )
    candidate = _parse_candidate(args.candidate, spec)
    report = diagonal.membership_scan(spec, candidate, args.depth, args.prefix)
    if args.format == "csv":
        if spec.is_family:
            width = args.prefix if args.prefix is not None else args.depth
            rows = [
                (n, diagonal.row(spec, n, width)) for n in range(1, args.depth + 1)
            ]
        else:
            rows = list(enumerate(spec.rows, start=1))
        return _csv_text(("n", "digits"), rows)
    anti = report.antidiagonal
    return _json_text(
        {
            "antidiagonal": (
                anti.render() if isinstance(anti, EventuallyPeriodicString) else anti
            ),
            "cover": _frac(report.cover),
            "scan_depth": report.scan_depth,
            "found_at": report.found_at,
            "first_difference": {
                str(n): p for n, p in sorted(report.first_difference.items())
            },
        }
    )


# ----------------------------------------------------------------- subsets

def _parse_elements(text):
    if not text.strip():
        return ()
    return tuple(int(part) for part in text.split(","))


def _cmd_rank(args):
    s = subsets.FiniteSubset(_parse_elements(args.elements))
    return _json_text({"elements": list(s), "rank": subsets.rank(s)})


def _cmd_unrank(args):
    s = subsets.unrank(args.p, args.r)
    return _json_text({"p": args.p, "r": args.r, "elements": list(s)})


def _cmd_dovetail(args):
    subs = subsets.dovetail_enumerate(args.count)
    if args.format == "json":
        return _json_text({"count": args.count, "subsets": [list(s) for s in subs]})
    rows = [(i, " ".join(str(e) for e in s)) for i, s in enumerate(subs)]
    return _csv_text(("index", "elements"), rows)


def _cmd_figure1(args):
    coeffs, ratios = subsets.figure1_data(args.n)
    if args.format == "json":
        return _json_text(
            {
                "n": args.n,
                "coefficients": [{"p": p, "value": c} for p, c in coeffs],
                "ratios": [{"d": d, "q": _frac(q)} for d, q in ratios],
            }
        )
    rows = [("coeff", p, c, 1) for p, c in coeffs]
    rows += [("ratio", d, q.numerator, q.denominator) for d, q in ratios]
    return _csv_text(("series", "k", "num", "den"), rows)


def _cmd_table1(args):
    labels = None
    if args.labels is not None:
        labels = [part.strip() for part in args.labels.split(",")]
    values = subsets.table1_values(args.n, labels)
    if args.format == "json":
        return _json_text(
            {
                "n": args.n,
                "rows": [
                    {"label": label, "d": d, "q": _frac(q)} for label, d, q in values
                ],
            }
        )
    rows = [
        (label, d, q.numerator, q.denominator, "true") for label, d, q in values
    ]
    return _csv_text(("label", "d", "q_num", "q_den", "matches"), rows)


# ----------------------------------------------------------------- density

def _cmd_rho(args):
    a = density.PhiFormula(args.a)
    b = density.PhiFormula(args.b)
    if args.schedule is not None:
        schedule = tuple(int(part) for part in args.schedule.split(","))
    else:
        schedule = density.default_schedule(a, b)
    est = density.rho_limit(a, b, schedule)
    if args.format == "csv":
        rows = [
            (n, v.numerator, v.denominator, density.decimal_str(v))
            for n, v in est.samples
        ]
        return _csv_text(("n", "rho_num", "rho_den", "rho_decimal"), rows)
    cls = est.classification
    return _json_text(
        {
            "pair": list(est.pair),
            "samples": [
                {"n": n, "rho": _frac(v), "decimal": density.decimal_str(v)}
                for n, v in est.samples
            ],
            "classification": {
                "kind": cls.kind,
                "limit": None if cls.limit is None else _frac(cls.limit),
                "tolerance": None if cls.tolerance is None else _frac(cls.tolerance),
            },
        }
    )


def _cmd_figure2(args):
    schedule = [n for n in density.DEFAULT_FIGURE2_SCHEDULE if n <= args.max]
    data = density.figure2_data(schedule)
    if args.format == "json":
        return _json_text(
            {
                "samples": [
                    {"n": n, "f": _frac(f), "decimal": density.decimal_str(f)}
                    for n, f in data
                ]
            }
        )
    rows = [
        (n, f.numerator, f.denominator, density.decimal_str(f)) for n, f in data
    ]
    return _csv_text(("n", "f_num", "f_den", "f_decimal"), rows)


def _cmd_grid(args):
    grid = density.grid_6_4(args.n)
    if args.format == "json":
        return _json_text(
            {
                "n": grid.n,
                "bold_count": grid.bold_count,
                "cells": [
                    {"a": a, "b": b, "in_unit": unit, "lowest_terms": low}
                    for a, b, unit, low in grid.cells
                ],
            }
        )
    rows = [(a, b, _bool(unit), _bool(low)) for a, b, unit, low in grid.cells]
    return _csv_text(("a", "b", "in_unit", "lowest_terms"), rows)


# ------------------------------------------------------------------ chains

def _verdict_payload(ast):
    v = chains.verdict(ast)
    payload = {
        "chain": chains.render(ast),
        "pattern": v.pattern.value,
        "iff_prefix_len": v.iff_prefix_len,
        "independent": list(v.independent),
        "inconceivable": list(v.inconceivable),
        "valid": v.valid,
        "rationale": v.rationale,
    }
    if ast.annotations:
        payload["annotations"] = dict(ast.annotations)
    return payload


def _cmd_analyze(args):
    if args.expr is not None:
        return _json_text(_verdict_payload(chains.parse_chain(args.expr)))
    with open(args.script, encoding="utf-8") as fh:
        lines = [
            line.strip()
            for line in fh
            if line.strip() and not line.lstrip().startswith("#")
        ]
    return _json_text([_verdict_payload(chains.parse_chain(line)) for line in lines])


def _cmd_preset(args):
    return _json_text(_verdict_payload(chains.preset(args.name)))


# ------------------------------------------------------------------- wiring

def _add_output(p, formats=("json", "csv"), default=None):
    if formats:
        p.add_argument("--format", choices=formats, default=default or formats[0])
    p.add_argument("--output", default=None, help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagbench",
        description="exact-arithmetic workbench for diagonal scans, subset "
        "enumeration, density ratios, and inference chains",
    )
    top = parser.add_subparsers(dest="command", required=True)

    p = top.add_parser("diagonal", help="scan an array for a candidate string")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", choices=[f.value for f in diagonal.Family])
    grp.add_argument("--explicit", metavar="FILE", help="file of digit rows")
    p.add_argument("--depth", type=int, default=100, help="rows to scan")
    p.add_argument("--prefix", type=int, default=None, help="comparison window")
    p.add_argument("--candidate", default=None, help="digits or PRE(PERIOD)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--antidiag", default=None, help="decimal stream PRE(PERIOD)")
    p.add_argument("--randomize-subdiagonal", action="store_true")
    _add_output(p, formats=("json", "csv"))
    p.set_defaults(func=_cmd_diagonal)

    sub = top.add_parser("subsets", help="binomial tables and subset enumeration")
    ss = sub.add_subparsers(dest="subcommand", required=True)

    p = ss.add_parser("rank", help="colex rank of a finite subset")
    p.add_argument("--elements", required=True, help="comma-separated naturals")
    _add_output(p, formats=("json",))
    p.set_defaults(func=_cmd_rank)

    p = ss.add_parser("unrank", help="finite subset from cardinality and rank")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_output(p, formats=("json",))
    p.set_defaults(func=_cmd_unrank)

    p = ss.add_parser("dovetail", help="stage-ordered subset enumeration")
    p.add_argument("--count", type=int, default=20)
    _add_output(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_dovetail)

    p = ss.add_parser("figure1", help="coefficient and ratio series for even n")
    p.add_argument("--n", type=int, default=40)
    _add_output(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_figure1)

    p = ss.add_parser("table1", help="closed-form ratio rows at even n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labels", default=None, help="subset of rows, comma-separated")
    _add_output(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_table1)

    den = top.add_parser("density", help="count-formula ratios and the fraction grid")
    ds = den.add_subparsers(dest="subcommand", required=True)

    p = ds.add_parser("rho", help="ratio of two count formulas over a schedule")
    names = [f.value for f in density.PhiFormula]
    p.add_argument("--a", choices=names, required=True)
    p.add_argument("--b", choices=names, required=True)
    p.add_argument("--schedule", default=None, help="comma-separated sample points")
    _add_output(p, formats=("json", "csv"))
    p.set_defaults(func=_cmd_rho)

    p = ds.add_parser("figure2", help="correction factor over a geometric ramp")
    p.add_argument("--max", type=int, default=100000)
    _add_output(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_figure2)

    p = ds.add_parser("grid", help="fraction grid with lowest-terms flags")
    p.add_argument("--n", type=int, required=True)
    _add_output(p, formats=("csv", "json"))
    p.set_defaults(func=_cmd_grid)

    ch = top.add_parser("chains", help="classify contradiction chains")
    cs = ch.add_subparsers(dest="subcommand", required=True)

    p = cs.add_parser("analyze", help="judge a chain expression or script")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--expr", help="a single chain expression")
    grp.add_argument("--script", help="file with one chain per line, # comments")
    _add_output(p, formats=("json",))
    p.set_defaults(func=_cmd_analyze)

    p = cs.add_parser("preset", help="judge a built-in chain")
    p.add_argument("name", choices=sorted(chains.PRESET_TEXTS))
    _add_output(p, formats=("json",))
    p.set_defaults(func=_cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except (WorkbenchError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
