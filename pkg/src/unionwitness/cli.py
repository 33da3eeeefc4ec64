"""Command-line front end.

Subcommands: bounds, realize, verify, oracle, counterexample.  Output is a
single JSON object on stdout with deterministic field and key order, so runs
are diffable.  Exit codes: 0 success / feasible / verified, 1 infeasible or
verdict false, 2 invalid input or enumeration guardrail exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import serialization as wire
from .bounds import bounds
from .counting import realize_counting
from .errors import GuardrailExceededError, InfeasibleError, UnionWitnessError
from .measure import realize_measure
from .model import Instance, Mode
from .oracle import achievable_unions, achievable_unions_restricted, addendum_counterexample, witness_counts
from .verify import materialize, verify
from .serialization import format_exact


def _instance(args: argparse.Namespace) -> Instance:
    return Instance(wire.parse_sizes(args.sizes), args.k, Mode(args.mode))


def _instance_dict(inst: Instance) -> dict[str, Any]:
    return {
        "sizes": [format_exact(a) for a in inst.sizes],
        "k": inst.k,
        "mode": inst.mode.value,
    }


def _cmd_bounds(args: argparse.Namespace) -> tuple[int, dict]:
    inst = _instance(args)
    payload = {"instance": _instance_dict(inst)}
    payload.update(wire.feasibility_to_dict(bounds(inst)))
    return 0, payload


def _cmd_realize(args: argparse.Namespace) -> tuple[int, dict]:
    inst = _instance(args)
    a = wire.parse_exact(args.a, "target union size")
    if inst.mode is Mode.COUNTING:
        w = realize_counting(inst, a)
    else:
        w = realize_measure(inst, a)
    payload: dict[str, Any] = {
        "instance": _instance_dict(inst),
        "a": format_exact(a),
        "witness": wire.witness_to_dict(w),
    }
    if args.materialize:
        payload["materialization"] = wire.materialization_to_dict(materialize(w, inst.mode))
    return 0, payload


def _cmd_verify(args: argparse.Namespace) -> tuple[int, dict]:
    inst = _instance(args)
    a = wire.parse_exact(args.a, "target union size")
    if args.witness_file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.witness_file, "r", encoding="utf-8") as handle:
            raw = handle.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UnionWitnessError(f"witness file is not valid JSON: {exc}") from exc
    w = wire.witness_from_dict(data, inst.n)
    report = verify(w, inst, a)
    payload = {
        "instance": _instance_dict(inst),
        "a": format_exact(a),
        "report": wire.verify_report_to_dict(report),
    }
    return (0 if report.verdict else 1), payload


def _cmd_oracle(args: argparse.Namespace) -> tuple[int, dict]:
    sizes = wire.parse_sizes(args.sizes)
    if any(a.denominator != 1 for a in sizes):
        raise UnionWitnessError("oracle enumeration requires integer sizes")
    int_sizes = [int(a) for a in sizes]
    payload: dict[str, Any] = {
        "sizes": [format_exact(a) for a in sizes],
        "k": args.k,
    }
    if args.restrict is not None:
        allowed = sorted({int(c) for c in args.restrict.split(",")})
        payload["restrict"] = allowed
        achievable = achievable_unions_restricted(int_sizes, args.k, allowed)
    else:
        achievable = achievable_unions(int_sizes, args.k)
    payload["achievable"] = [format_exact(u) for u in sorted(achievable)]
    if args.count:
        allowed = (
            sorted({int(c) for c in args.restrict.split(",")}) if args.restrict else None
        )
        counts = witness_counts(int_sizes, args.k, allowed)
        payload["witness_counts"] = {format_exact(u): c for u, c in counts.items()}
    return 0, payload


def _cmd_counterexample(args: argparse.Namespace) -> tuple[int, dict]:
    report = addendum_counterexample(args.n)
    payload = {
        "n": report.n,
        "k": report.n,
        "sizes": ["1"] * report.n,
        "counting_lower": format_exact(report.counting_lower),
        "restricted_cardinalities": sorted(report.restricted_cardinalities),
        "restricted_achievable": [format_exact(u) for u in sorted(report.restricted_achievable)],
        "unrestricted_achievable": [
            format_exact(u) for u in sorted(report.unrestricted_achievable)
        ],
        "union2_supports": [
            [list(key.indices) for key in sorted(support)]
            for support in report.union2_supports
        ],
        "addendum_fails_for_counting": report.fails_for_counting,
    }
    return 0, payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unionwitness",
        description=(
            "Decide which union sizes are achievable for prescribed set sizes "
            "with all k-wise intersections empty, and build verifiable witnesses."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sizes", required=True, help="comma-separated sizes, e.g. 1,1,5/2")
        p.add_argument("--k", required=True, type=int, help="intersection bound (2 <= k <= n)")
        p.add_argument(
            "--mode",
            choices=[m.value for m in Mode],
            default=Mode.COUNTING.value,
            help="integer counting or rational measure (default: counting)",
        )

    p_bounds = sub.add_parser("bounds", help="feasibility interval for the union size")
    add_instance_flags(p_bounds)
    p_bounds.set_defaults(handler=_cmd_bounds)

    p_realize = sub.add_parser("realize", help="construct a witness for a union size")
    add_instance_flags(p_realize)
    p_realize.add_argument("--a", required=True, help="target union size")
    p_realize.add_argument(
        "--materialize", action="store_true", help="also emit explicit sets or blocks"
    )
    p_realize.set_defaults(handler=_cmd_realize)

    p_verify = sub.add_parser("verify", help="check a witness file against an instance")
    add_instance_flags(p_verify)
    p_verify.add_argument("--a", required=True, help="claimed union size")
    p_verify.add_argument(
        "--witness-file", required=True, help="witness JSON path, or - for stdin"
    )
    p_verify.set_defaults(handler=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exhaustive achievable-union enumeration")
    p_oracle.add_argument("--sizes", required=True, help="comma-separated integer sizes")
    p_oracle.add_argument("--k", required=True, type=int)
    p_oracle.add_argument(
        "--restrict", help="comma-separated allowed region cardinalities", default=None
    )
    p_oracle.add_argument(
        "--count", action="store_true", help="also count witnesses per union size"
    )
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_cex = sub.add_parser(
        "counterexample",
        help="show the two-layer restriction failing in counting mode (unit sizes, k = n)",
    )
    p_cex.add_argument("--n", required=True, type=int, help="number of sets (5..7)")
    p_cex.set_defaults(handler=_cmd_counterexample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.handler(args)
    except InfeasibleError as exc:
        payload = {"error": "infeasible", "detail": str(exc)}
        if exc.report is not None:
            payload["report"] = wire.feasibility_to_dict(exc.report)
        code = 1
    except GuardrailExceededError as exc:
        code, payload = 2, {"error": "too-large", "detail": str(exc)}
    except (UnionWitnessError, ValueError, OSError) as exc:
        code, payload = 2, {"error": "invalid-input", "detail": str(exc)}
    print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
