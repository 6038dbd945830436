"""Command-line front end.

Exit codes: 0 success / check passed, 1 usage or validation error,
2 a mathematical check ran and failed. All numeric output is exact.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import catalog
from .catalog import (
    DEFAULT_ORDER,
    FAMILIES,
    CharacteristicSeries,
    closed_form_cpn,
    construct,
    format_spec,
    h_n,
    parse_spec,
)
from .chern import (
    chern_data_from_json,
    evaluate_genus,
    graded_poly_to_json,
    multiplicative_sequence,
)
from .gaussian import format_gaussian
from .localization import (
    cpn_fixed_points,
    equivariant_genus,
    fixed_points_from_json,
)
from .rigidity import NotEvenSeriesError, ar_check, classify, classify_oriented
from .series import series_to_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; the contract reserves 2 for
    # failed mathematical checks, so remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def default_order() -> int:
    raw = os.environ.get("GENUS_DEFAULT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"GENUS_DEFAULT_ORDER must be an integer, got {raw!r}")
    if value < 2:
        raise UsageError("GENUS_DEFAULT_ORDER must be at least 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genus", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("catalog", help="list series families and parameters")

    p = sub.add_parser("expand", help="print the coefficients of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cpn", help="genus of complex projective n-space")
    p.add_argument("--series", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--closed-form", action="store_true",
                   help="cross-check against the closed form (exit 2 on mismatch)")

    p = sub.add_parser("chern", help="evaluate a genus on Chern numbers, or dump K_n")
    p.add_argument("--series", required=True)
    p.add_argument("--data", help="ChernData JSON file")
    p.add_argument("--kn", type=int, help="dump the degree-n sequence polynomial")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("localize", help="equivariant genus of fixed-point data")
    p.add_argument("--series", required=True)
    p.add_argument("--input", help="fixed-point JSON file")
    p.add_argument("--weights", help="comma-separated CP^n weights, e.g. 0,1,3")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rigidity", help="algebraic rigidity sampling check")
    p.add_argument("--series", required=True)
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="generalized-Todd classification")
    p.add_argument("--series", required=True)
    p.add_argument("--oriented", action="store_true")
    p.add_argument("--expect-gt", action="store_true")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--json", action="store_true")

    return parser


def _load_series(text: str, order: int) -> CharacteristicSeries:
    return construct(parse_spec(text), order)


def _cmd_catalog(args) -> int:
    for family, params in FAMILIES.items():
        if family == "file":
            print("file:PATH  (JSON series file)")
        elif params:
            sig = ",".join(f"{p}=<q(i)>" for p in params)
            print(f"{family}:{sig}")
        else:
            print(family)
    return EXIT_OK


def _cmd_expand(args) -> int:
    order = args.order if args.order is not None else default_order()
    H = _load_series(args.series, order)
    if args.json:
        print(json.dumps(series_to_json(H.series)))
    else:
        print(", ".join(format_gaussian(c) for c in H.series.coeffs))
    return EXIT_OK


def _cmd_cpn(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    order = max(args.n, 2)
    H = _load_series(args.series, order)
    value = h_n(H, args.n)
    print(format_gaussian(value))
    if args.closed_form:
        spec = parse_spec(args.series)
        if spec.family == "file":
            raise UsageError("--closed-form is not available for file series")
        expected = closed_form_cpn(spec, args.n)
        print(f"closed form: {format_gaussian(expected)}")
        if expected != value:
            print("MISMATCH between series expansion and closed form", file=sys.stderr)
            return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_chern(args) -> int:
    if (args.data is None) == (args.kn is None):
        raise UsageError("chern needs exactly one of --data or --kn")
    if args.kn is not None:
        if args.kn < 0:
            raise UsageError("--kn must be nonnegative")
        H = _load_series(args.series, max(args.kn, 2))
        K = multiplicative_sequence(H, args.kn)
        if args.json:
            print(json.dumps(graded_poly_to_json(K)))
        else:
            for lam, value in K.items_sorted():
                print(f"{list(lam)}: {format_gaussian(value)}")
        return EXIT_OK
    with open(args.data) as fh:
        X = chern_data_from_json(json.load(fh))
    H = _load_series(args.series, max(X.dimension, 2))
    K = multiplicative_sequence(H, X.dimension)
    print(format_gaussian(evaluate_genus(K, X)))
    return EXIT_OK


def _cmd_localize(args) -> int:
    if (args.input is None) == (args.weights is None):
        raise UsageError("localize needs exactly one of --input or --weights")
    if args.weights is not None:
        try:
            weights = [int(w) for w in args.weights.split(",")]
        except ValueError:
            raise UsageError(f"--weights must be comma-separated integers, got {args.weights!r}")
        fps = cpn_fixed_points(weights)
    else:
        with open(args.input) as fh:
            fps = fixed_points_from_json(json.load(fh))
    order = args.order if args.order is not None else default_order()
    H = _load_series(args.series, order + fps.n)
    s = equivariant_genus(H, fps, order)
    if args.json:
        print(json.dumps(series_to_json(s)))
    else:
        print(s)
    return EXIT_OK


def _cmd_rigidity(args) -> int:
    H = _load_series(args.series, args.order + args.max_n)
    report = ar_check(H, args.max_n, args.order, args.trials, args.seed)
    if args.json:
        print(json.dumps(report.to_json()))
    elif report.passed:
        print(f"PASS: constant on {len(report.tuples_checked)} weight tuples "
              f"up to order {report.order}")
    else:
        weights, degree, coeff = report.witness
        print(f"FAIL: weights {list(weights)} give a nonconstant sum: "
              f"degree {degree} coefficient {format_gaussian(coeff)}")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_classify(args) -> int:
    order = args.order if args.order is not None else default_order()
    H = _load_series(args.series, order)
    try:
        report = classify_oriented(H) if args.oriented else classify(H)
    except NotEvenSeriesError as exc:
        if args.json:
            print(json.dumps({"is_gt": False, "case": "NotEven",
                              "witness_degree": exc.degree,
                              "coefficient": format_gaussian(exc.coefficient)}))
        else:
            print(f"not an oriented genus series: {exc}")
        return EXIT_CHECK_FAILED if args.expect_gt else EXIT_OK
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        if report.is_gt:
            print(f"GT series, case {report.case}: r1={format_gaussian(report.r1)}, "
                  f"h2={format_gaussian(report.h2)}, d={format_gaussian(report.d)}")
            if report.closed_form is not None:
                print(f"closed form: {format_spec(report.closed_form)}")
            if report.gab_form is not None:
                print(f"cot form: {format_spec(report.gab_form)}")
        else:
            print(f"not a GT series: first mismatch at degree {report.witness} "
                  f"(r1={format_gaussian(report.r1)}, h2={format_gaussian(report.h2)})")
    if args.expect_gt and not report.is_gt:
        return EXIT_CHECK_FAILED
    return EXIT_OK


_COMMANDS = {
    "catalog": _cmd_catalog,
    "expand": _cmd_expand,
    "cpn": _cmd_cpn,
    "chern": _cmd_chern,
    "localize": _cmd_localize,
    "rigidity": _cmd_rigidity,
    "classify": _cmd_classify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.verb](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
