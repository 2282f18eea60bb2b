"""Batch command-line front end: JSON specs in, JSON or table verdicts out.

Exit status: 0 when a command ran and decided its question, 2 when a
periodicity search came back unknown (so scripts cannot mistake a
bounded failure for a decision), 1 on bad input or a failed identity
suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import identity_suite
from .doubling import crossed_product_report, double
from .graphs import DEFAULT_PATH_CAP, GraphError, TwoGraph
from .groups import (
    FiniteAbelian,
    GroupError,
    check_conditions,
    classify,
    group_from_json,
    transfer_eval,
)
from .periodicity import decide_periodicity


class _Parser(argparse.ArgumentParser):
    # usage problems are input errors: print help, exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _load_json_arg(value: str) -> dict:
    if value.lstrip().startswith("{"):
        return json.loads(value)
    with open(value, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_graph(value: str) -> TwoGraph:
    return TwoGraph.from_json(_load_json_arg(value))


def _load_group(value: str):
    return group_from_json(_load_json_arg(value))


def _parse_degree(value: str) -> tuple:
    parts = value.replace("(", " ").replace(")", " ").replace(",", " ").split()
    if len(parts) != 2:
        raise GraphError(f"bad degree {value!r}, expected like '2,2'")
    return (int(parts[0]), int(parts[1]))


def _parse_rational(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twograph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    theta = sub.add_parser("theta", help="single-graph questions")
    theta_sub = theta.add_subparsers(dest="subcommand", required=True)

    p = theta_sub.add_parser("validate", help="check the commutation table")
    p.add_argument("--spec", required=True, help="graph JSON file or inline JSON")

    p = theta_sub.add_parser("normal-form", help="normalize or reorder a word")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True, help="letters like 'r0 b1'")
    p.add_argument("--pattern", help="color pattern like 'RB' to reorder into")

    p = theta_sub.add_parser("periodicity", help="bounded periodicity decision")
    p.add_argument("--spec", required=True)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--path-cap", type=int, default=DEFAULT_PATH_CAP)

    p = sub.add_parser("double", help="emit the doubled graph")
    p.add_argument("--spec", required=True)

    p = sub.add_parser("crossed-product", help="simplicity of the core crossed product")
    p.add_argument("--spec", required=True)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--path-cap", type=int, default=DEFAULT_PATH_CAP)

    core = sub.add_parser("core", help="symbolic identity suite")
    core_sub = core.add_subparsers(dest="subcommand", required=True)
    p = core_sub.add_parser("verify", help="run every identity check")
    p.add_argument("--spec", required=True)
    p.add_argument("--max-degree", default="2,2", help="degree bound like '2,2'")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--path-cap", type=int, default=DEFAULT_PATH_CAP)
    p.add_argument("--output", choices=("json", "table"), default="table")

    group = sub.add_parser("group", help="compact abelian group systems")
    group_sub = group.add_subparsers(dest="subcommand", required=True)

    p = group_sub.add_parser("classify", help="crossed-product classification")
    p.add_argument("--group", required=True, help="group JSON file or inline JSON")
    p.add_argument("--range", type=int, default=12, dest="test_range")

    p = group_sub.add_parser("transfer", help="exact transfer average on a finite group")
    p.add_argument("--group", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--table", required=True, help="JSON list of rationals")

    p = group_sub.add_parser("g123", help="system conditions report")
    p.add_argument("--group", required=True)
    p.add_argument("--range", type=int, default=12, dest="test_range")

    return parser


def _run_theta(args) -> int:
    if args.subcommand == "validate":
        graph = _load_graph(args.spec)
        _emit({"valid": True, "n1": graph.n_blue, "n2": graph.n_red})
        return 0
    if args.subcommand == "normal-form":
        graph = _load_graph(args.spec)
        path = graph.path(args.word)
        out = {
            "degree": list(path.degree),
            "normal_form": path.pretty(),
        }
        if args.pattern:
            letters = path.reorder(args.pattern)
            out["reordered"] = " ".join(
                ("b" if c == 0 else "r") + str(x) for c, x in letters
            )
        _emit(out)
        return 0
    if args.subcommand == "periodicity":
        graph = _load_graph(args.spec)
        verdict = decide_periodicity(graph, kmax=args.kmax, cap=args.path_cap)
        _emit(verdict.to_json())
        return 2 if verdict.is_unknown else 0
    raise GraphError(f"unknown theta subcommand {args.subcommand!r}")


def _run_core(args) -> int:
    graph = _load_graph(args.spec)
    checks = identity_suite(
        graph,
        max_degree=_parse_degree(args.max_degree),
        seed=args.seed,
        cap=args.path_cap,
    )
    if args.output == "json":
        _emit([check.to_json() for check in checks])
    else:
        width = max(len(check.name) for check in checks)
        for check in checks:
            status = "pass" if check.passed else "FAIL"
            line = f"{check.name:<{width}}  {check.cases:>7}  {status}"
            if check.detail and not check.passed:
                line += f"  {check.detail}"
            print(line)
    return 0 if all(check.passed for check in checks) else 1


def _run_group(args) -> int:
    group = _load_group(args.group)
    if args.subcommand == "classify":
        report = classify(group, range(1, args.test_range + 1))
        _emit(report.to_json())
        return 0
    if args.subcommand == "g123":
        report = check_conditions(group, range(1, args.test_range + 1))
        _emit(report.to_json())
        return 0
    if args.subcommand == "transfer":
        if not isinstance(group, FiniteAbelian):
            raise GroupError("transfer tables need a finite group")
        table = [_parse_rational(v) for v in json.loads(args.table)]
        values = transfer_eval(group, args.a, table)
        _emit({"a": args.a, "values": [str(v) for v in values]})
        return 0
    raise GroupError(f"unknown group subcommand {args.subcommand!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "theta":
            return _run_theta(args)
        if args.command == "double":
            _emit(double(_load_graph(args.spec)).to_json())
            return 0
        if args.command == "crossed-product":
            report = crossed_product_report(
                _load_graph(args.spec), kmax=args.kmax, cap=args.path_cap
            )
            _emit(report.to_json())
            return 2 if report.verdict.is_unknown else 0
        if args.command == "core":
            return _run_core(args)
        if args.command == "group":
            return _run_group(args)
    except (GraphError, GroupError, OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    raise SystemExit(f"unknown command {args.command!r}")


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
