"""Command-line front end.

Commands: ``bound``, ``witness``, ``verify``, ``grid`` and ``poly``.
Exit codes: 0 success, 1 usage error, 2 bound methods disagree (or a
reachable state fails P1-P3), 3 a bound miss found under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds
from .harness import (DEFAULT_BUDGET, METHODS, BudgetError, CountReport, compute_bounds,
                      reports_to_csv, run_grid, summarize, verify_family)
from .textio import format_automaton
from .witnesses import FAMILIES, WitnessError, WitnessFamily

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_MISS = 0, 1, 2, 3

LETTER_HELP = """\
letters are integers: for table1/table2, sigma_k is letter (K - k) where K is
the alphabet size; for two_letter/three_letter, a=0, b=1, c=2.  With this
numbering table2 coincides with two_letter (alpha=2) and three_letter (alpha=3).
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..4, got {text!r}")
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _methods(text: str) -> tuple[str, ...]:
    if text == "all":
        return METHODS
    methods = tuple(m.strip() for m in text.split(","))
    bad = [m for m in methods if m not in METHODS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown method(s) {', '.join(bad)}")
    return methods


TABLE_COLUMNS = [
    ("profile", 14), ("family", 12), ("recurrence", 10), ("formula", 10), ("brute", 10),
    ("measured", 10), ("status", 12),
]


def _table_header() -> str:
    return "  ".join(name.ljust(width) for name, width in TABLE_COLUMNS).rstrip()


def _table_row(r: CountReport) -> str:
    def cell(v):
        return "-" if v is None else str(v)
    values = [",".join(map(str, r.profile)), cell(r.family), cell(r.bound_recurrence),
              cell(r.bound_formula), cell(r.bound_bruteforce), cell(r.measured_sc), r.status]
    line = "  ".join(v.ljust(w) for v, (_, w) in zip(values, TABLE_COLUMNS)).rstrip()
    return line + (f"  {r.note}" if r.note else "")


def _emit(reports, fmt: str, timings: bool, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for r in reports:
            out.write(r.to_json(timings) + "\n")
    elif fmt == "csv":
        out.write(reports_to_csv(reports, timings))
    else:
        out.write(_table_header() + "\n")
        for r in reports:
            out.write(_table_row(r) + "\n")


def _check_budget(args):
    if args.budget > DEFAULT_BUDGET and not args.allow_large:
        raise UsageError(
            f"--budget above {DEFAULT_BUDGET} needs --allow-large (subset space grows as 2**budget)")


def cmd_bound(args) -> int:
    report = compute_bounds(args.sizes, args.methods)
    _emit([report], args.format, args.timings)
    return EXIT_INCONSISTENT if not report.consistent else EXIT_OK


def cmd_witness(args) -> int:
    family = WitnessFamily(args.family, args.sizes)
    dfas = family.build()
    if args.out is None:
        sys.stdout.write(family.manifest_line() + "\n")
        for k, dfa in enumerate(dfas, 1):
            sys.stdout.write(format_automaton(dfa, [f"component A{k}"]))
        return EXIT_OK
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for k, dfa in enumerate(dfas, 1):
        name = f"A{k}.dfa"
        (out / name).write_text(format_automaton(dfa))
        names.append(name)
    (out / "manifest.txt").write_text(family.manifest_line() + "\n" + "\n".join(names) + "\n")
    print(f"wrote {len(names)} automata over {family.alphabet_size} letters to {out}")
    return EXIT_OK


def _exit_for(reports, strict: bool) -> int:
    if any(r.status == "inconsistent" for r in reports):
        return EXIT_INCONSISTENT
    if strict and any(r.status == "missed" for r in reports):
        return EXIT_MISS
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_budget(args)
    report = verify_family(args.family, args.sizes, args.budget)
    _emit([report], args.format, args.timings)
    return _exit_for([report], args.strict)


def cmd_grid(args) -> int:
    _check_budget(args)
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    reports = run_grid(args.family, args.alpha, args.sizes, args.budget, args.jobs)
    _emit(reports, args.format, args.timings)
    summary = summarize(reports)
    line = " ".join(f"{k}={v}" for k, v in summary.items())
    stream = sys.stdout if args.format == "table" else sys.stderr
    stream.write(f"summary: {line}\n")
    if summary["missed"]:
        missed = [",".join(map(str, r.profile)) for r in reports if r.status == "missed"]
        stream.write(f"counterexamples: {' '.join(missed)}\n")
    return _exit_for(reports, args.strict)


POLY_KINDS = ("s_minus", "s_plus", "r", "r_expanded", "m")


def cmd_poly(args) -> int:
    alpha = args.alpha
    if alpha < 1:
        raise UsageError("--alpha must be at least 1")
    if "r_expanded" in args.which and alpha < 2:
        raise UsageError("r_expanded needs --alpha >= 2")
    lines = []
    for kind in args.which:
        if kind == "r":
            lines.append((f"r_{alpha - 1}", bounds.r_poly(alpha)))
        elif kind == "r_expanded":
            lines.append((f"r_{alpha - 1} (expanded)", bounds.r_expanded(alpha)))
        elif kind in ("s_minus", "s_plus"):
            s_minus, s_plus = bounds.s_polys(alpha)
            seq = s_minus if kind == "s_minus" else s_plus
            lines.extend((f"{kind}_{j}", p) for j, p in enumerate(seq))
        else:
            lines.extend((f"m_{i}", p) for i, p in enumerate(bounds.m_polys(alpha)))
    if len(lines) == 1:
        print(lines[0][1])
    else:
        for name, p in lines:
            print(f"{name} = {p}")
    return EXIT_OK


def _which(text: str) -> tuple[str, ...]:
    kinds = tuple(k.strip() for k in text.split(","))
    bad = [k for k in kinds if k not in POLY_KINDS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown polynomial(s) {', '.join(bad)}")
    return kinds


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multicat",
                     description="State complexity of multiple catenation of DFAs.",
                     epilog=LETTER_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--timings", action="store_true", help="include wall_time_ms in json/csv")

    def budget_flags(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum total NFA states per profile (default %(default)s)")
        p.add_argument("--allow-large", action="store_true",
                       help=f"accept --budget above {DEFAULT_BUDGET} despite the memory cost")
        p.add_argument("--strict", action="store_true", help="exit 3 when a bound is missed")

    p = sub.add_parser("bound", help="compute the valid-state bound")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--methods", type=_methods, default=("recurrence", "formula"),
                   help="comma list of brute,recurrence,formula or 'all'")
    output_flags(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("witness", help="write witness automata", epilog=LETTER_HELP)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--out", help="output directory (default: print to stdout)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="measure one witness against the bound")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    budget_flags(p)
    output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grid", help="verify a witness family over a grid of profiles")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--alpha", type=_int_range, required=True, help="e.g. 2..4")
    p.add_argument("--sizes", type=_int_range, required=True, help="e.g. 2..4")
    p.add_argument("--jobs", type=int, default=1)
    budget_flags(p)
    output_flags(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("poly", help="print the bound polynomials")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--which", type=_which, default=("r",),
                   help=f"comma list of {', '.join(POLY_KINDS)}")
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, WitnessError, BudgetError, ValueError) as exc:
        print(f"multicat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
