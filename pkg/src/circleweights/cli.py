"""Command-line front end.

Exit codes: 0 pass, 1 inadmissible, 2 input error, 3 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import configfile
from .core import format_rational
from .hp2 import Family, Hp2ActionParams, InvalidParamsError, weights_from_params
from .localization import pontryagin_report
from .verifier import (
    Inadmissible,
    TheoremViolation,
    admissible,
    classify,
    search,
)

EXIT_OK, EXIT_INADMISSIBLE, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3


def _dump_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load(path):
    try:
        return configfile.load(path)
    except (configfile.ConfigError, ValueError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def _report_obj(report) -> dict:
    return {
        "admissible": report.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
        ],
    }


def _print_report(report) -> None:
    print(f"Admissibility: {'PASS' if report.passed else 'FAIL'}")
    for c in report.checks:
        print(f"  [{'ok' if c.passed else 'FAIL':>4}] {c.name:<26} {c.detail}")


def _p_str(params: Hp2ActionParams) -> str:
    return "(" + ", ".join(format_rational(x) for x in params.p) + ")"


def cmd_check(args) -> int:
    data = _load(args.path)
    if data is None:
        return EXIT_INPUT
    try:
        report = admissible(data)
        pont = pontryagin_report(data)
    except ValueError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        obj = _report_obj(report)
        obj["pontryagin"] = {k: format_rational(v) for k, v in pont.as_dict().items()}
        _dump_json(obj)
    else:
        _print_report(report)
        print("Pontryagin numbers (localization):")
        for k, v in pont.as_dict().items():
            print(f"  {k:<20} {format_rational(v)}")
    return EXIT_OK if report.passed else EXIT_INADMISSIBLE


def _params_from_args(args) -> Hp2ActionParams:
    if args.doubled is not None:
        if args.k is not None:
            raise InvalidParamsError("give either --k or --doubled, not both")
        return Hp2ActionParams(tuple(args.doubled))
    if args.k is None:
        raise InvalidParamsError("one of --k or --doubled is required")
    family = {"standard": Family.STANDARD, "semi": Family.SEMI_INTEGER}[args.family]
    return Hp2ActionParams.from_exponents(args.k, family)


def cmd_hp2(args) -> int:
    try:
        params = _params_from_args(args)
        data = weights_from_params(params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not params.is_effective:
        print(
            f"note: {params.doubled} acts with kernel of order {params.weight_gcd}; "
            f"printing the effective action {params.reduced().doubled}",
            file=sys.stderr,
        )
    sys.stdout.write(configfile.dumps(data))
    return EXIT_OK


def cmd_classify(args) -> int:
    data = _load(args.path)
    if data is None:
        return EXIT_INPUT
    try:
        result = classify(data)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(result, Inadmissible):
        if args.json:
            obj = _report_obj(result.report)
            obj["failed_check"] = result.failed_check
            _dump_json(obj)
        else:
            print(f"Inadmissible (failed check: {result.failed_check})")
            _print_report(result.report)
        return EXIT_INADMISSIBLE
    params = result.params
    if args.json:
        _dump_json(
            {
                "family": str(result.family),
                "doubled": list(params.doubled),
                "p": [format_rational(x) for x in params.p],
                "role_permutation": list(result.role_permutation),
                "fixed_points": list(result.point_names),
                "case": str(result.case_label),
            }
        )
    else:
        print(f"{result.family}, p = {_p_str(params)}")
        print(f"  doubled parameters: {params.doubled}")
        roles = ", ".join(
            f"q{r + 1} = point {i}" for r, i in enumerate(result.role_permutation)
        )
        print(f"  roles: {roles}")
        for i, name in enumerate(result.point_names):
            print(f"  point {i} -> {name}")
        print(f"  case: {result.case_label}")
    return EXIT_OK


def _summary_obj(summary) -> dict:
    return {
        "bound": summary.bound,
        "admissible": len(summary.admissible_configs),
        "candidates": summary.candidates,
        "families": summary.family_counts,
        "case_counts": summary.case_counts,
        "case3_reclassified_as_case1": summary.case3_reclassified,
        "strict_case3_absent": summary.case3_b2_check,
        "generated_set_equal": summary.generated_set_equal,
        "pontryagin_ok": summary.pontryagin_ok,
        "verified": summary.verified,
    }


def cmd_search(args) -> int:
    if args.bound < 2:
        print(f"error: --bound must be at least 2, got {args.bound}", file=sys.stderr)
        return EXIT_INPUT
    try:
        summary = search(args.bound, backend=args.backend, workers=args.workers)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.emit:
        emitted = {
            "bound": summary.bound,
            "configurations": [
                {
                    **configfile.to_obj(cfg.data),
                    "family": str(cfg.match.family),
                    "doubled": list(cfg.match.params.doubled),
                    "p": [format_rational(x) for x in cfg.match.params.p],
                }
                for cfg in summary.admissible_configs
            ],
        }
        Path(args.emit).write_text(json.dumps(emitted, indent=2, sort_keys=True) + "\n")
    if args.json:
        _dump_json(_summary_obj(summary))
    else:
        fam = summary.family_counts
        rows = [
            ("bound", summary.bound),
            ("candidates after prefilter", summary.candidates),
            ("admissible configurations", len(summary.admissible_configs)),
            ("  Standard", fam["Standard"]),
            ("  SemiInteger", fam["SemiInteger"]),
            ("Case1 pairings", summary.case_counts["Case1"]),
            ("Case2 pairings (must be 0)", summary.case_counts["Case2"]),
            ("strict Case3 pairings", summary.case_counts["Case3"]),
            ("Case3 shapes collapsing to Case1", summary.case3_reclassified),
            ("generated set equal", summary.generated_set_equal),
            ("p1^2 = 4 and p2 = 7 everywhere", summary.pontryagin_ok),
        ]
        for k, v in rows:
            print(f"{k:<34} {v}")
        for d in summary.missing:
            print(f"  missing: {d!r}")
        for d in summary.extra:
            print(f"  extra:   {d!r}")
        print(f"verification: {'PASS' if summary.verified else 'FAIL'}")
    return EXIT_OK if summary.verified else EXIT_VIOLATION


def _int_triple(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleweights",
        description="Fixed-point weights of circle actions and HP^2 verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the admissibility checks and Pontryagin numbers")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="match a configuration to an HP^2 action")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hp2", help="print the fixed-point data of an HP^2 action")
    p.add_argument("--k", type=_int_triple, help="family exponents k1,k2,k3")
    p.add_argument("--family", choices=("standard", "semi"), default="standard")
    p.add_argument("--doubled", type=_int_triple, help="doubled parameters d1,d2,d3")
    p.set_defaults(func=cmd_hp2)

    p = sub.add_parser("search", help="exhaustive verification up to a weight bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--emit", help="write every admissible configuration to this JSON file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.set_defaults(func=cmd_search)
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
