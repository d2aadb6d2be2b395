"""Command-line surface.

Exit codes: 0 clean run, 1 a verification found a counterexample or a
census recorded route disagreements, 2 input/usage error (parse failures
included), 3 the input table is not a hypersemigroup where one is
required.  All diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .classify import CLASS_ORDER, ClassificationReport, classify, verify_theorems
from .core import CarrierMismatchError, HyperOp, NotAssociativeError
from .enumeration import (
    EnumerationBudgetError,
    census,
    search_nonassociative_divergence,
)
from .fuzzy import FuzzySubset, compose
from .ideals import (
    is_fuzzy_left_ideal,
    is_fuzzy_right_ideal,
    left_ideal_closure,
    right_ideal_closure,
)
from .tableio import TableParseError, parse_table

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_INPUT = 2
EXIT_NOT_ASSOCIATIVE = 3


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_table(path: str) -> HyperOp:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def _parse_fuzzy(text: str, order: int) -> FuzzySubset:
    toks = [t.strip() for t in text.split(",")]
    try:
        values = [Fraction(t) for t in toks]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed fuzzy value list {text!r}") from None
    if len(values) != order:
        raise CarrierMismatchError(
            f"expected {order} values for this table, got {len(values)}"
        )
    return FuzzySubset(values)


def _fmt_values(f: FuzzySubset) -> str:
    # Fraction renders p/q in lowest terms and integers bare
    return ", ".join(str(v) for v in f.values)


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _render_classification(report: ClassificationReport) -> str:
    lines = [f"order: {report.order}"]
    for cls in CLASS_ORDER:
        cr = report.classes[cls]
        lines.append(
            f"{cls.value}: {_yes(cr.verdict)}  "
            f"(elementwise={_yes(cr.elementwise)}, subset-1={_yes(cr.subset_singleton)}, "
            f"subset-2={_yes(cr.subset_all)}, fuzzy={_yes(cr.fuzzy)}; "
            f"agree={_yes(cr.routes_agree)})"
        )
        for w in cr.witnesses:
            if w.route == "elementwise" and w.holds:
                ws = ", ".join(str(x) for x in w.elements)
                lines.append(f"  a={w.element}: witness ({ws})")
            elif not w.holds:
                lines.append(f"  fails at a={w.element} ({w.route})")
    lines.append(f"all routes agree: {_yes(report.all_routes_agree)}")
    return "\n".join(lines) + "\n"


def _cmd_classify(args) -> int:
    try:
        h = _load_table(args.table)
    except (OSError, TableParseError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    try:
        report = classify(h)
    except NotAssociativeError:
        return _fail("input table is not a hypersemigroup", EXIT_NOT_ASSOCIATIVE)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(_render_classification(report), end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        h = _load_table(args.table)
    except (OSError, TableParseError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    try:
        report = verify_theorems(h, random_trials=args.trials, seed=args.seed)
    except NotAssociativeError:
        return _fail("input table is not a hypersemigroup", EXIT_NOT_ASSOCIATIVE)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(f"order: {report.order}")
        for check in report.checks:
            line = (
                f"{check.cls.value}: verdict={_yes(check.verdict)} "
                f"routes_agree={_yes(check.routes_agree)} trials={check.trials}"
            )
            if check.counterexample is not None:
                line += f" counterexample=({_fmt_values(check.counterexample)})"
            if not check.failure_reverified:
                line += " failure-witness-did-not-reverify"
            print(line)
        print(f"result: {'pass' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FOUND


def _cmd_census(args) -> int:
    progress = None
    if args.exhaustive and args.order >= 3:

        def progress(done: int, total: int) -> None:
            print(f"census progress: {done}/{total} tables", file=sys.stderr)

    try:
        report = census(
            args.order,
            exhaustive=args.exhaustive,
            sample=args.sample,
            seed=args.seed,
            jobs=args.jobs,
            allow_large=args.exhaustive,
            progress=progress,
        )
    except (ValueError, EnumerationBudgetError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(report.render(), end="")
    return EXIT_OK if report.route_disagreements == 0 else EXIT_FOUND


def _cmd_compose(args) -> int:
    try:
        h = _load_table(args.table)
        f = _parse_fuzzy(args.f, h.order)
        g = _parse_fuzzy(args.g, h.order)
    except (OSError, TableParseError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    print(_fmt_values(compose(h, f, g)))
    return EXIT_OK


def _cmd_ideals(args) -> int:
    try:
        h = _load_table(args.table)
        f = _parse_fuzzy(args.f, h.order)
    except (OSError, TableParseError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    print(f"f: {_fmt_values(f)}")
    print(f"fuzzy right ideal: {_yes(is_fuzzy_right_ideal(h, f))}")
    print(f"fuzzy left ideal: {_yes(is_fuzzy_left_ideal(h, f))}")
    print(f"right ideal closure: {_fmt_values(right_ideal_closure(h, f))}")
    print(f"left ideal closure: {_fmt_values(left_ideal_closure(h, f))}")
    return EXIT_OK


def _cmd_search_nonassoc(args) -> int:
    try:
        result = search_nonassociative_divergence(
            args.order, args.budget, seed=args.seed
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    if result.finding is None:
        print(
            f"budget exhausted, none found "
            f"(examined {result.examined} non-associative tables)"
        )
    else:
        finding = result.finding
        print(
            f"divergence found after {result.examined} non-associative tables: "
            f"class {finding.cls.value}: elementwise={_yes(finding.elementwise)} "
            f"fuzzy={_yes(finding.fuzzy_pointset)}"
        )
        print(finding.table_text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersemigroups",
        description="Classify and verify finite hypersemigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a table file")
    p.add_argument("table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="verify the characterization theorems on a table")
    p.add_argument("table")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", default="0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="tally classes over a table population")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", default="0")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("compose", help="sup-min composition of two fuzzy subsets")
    p.add_argument("table")
    p.add_argument("--f", required=True, help="comma-separated rationals, e.g. 3/10,7/10")
    p.add_argument("--g", required=True)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("ideals", help="ideal predicates and closures for a fuzzy subset")
    p.add_argument("table")
    p.add_argument("--f", required=True)
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser(
        "search-nonassoc",
        help="look for definitional/fuzzy divergence on non-associative tables",
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", default="0")
    p.set_defaults(func=_cmd_search_nonassoc)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
