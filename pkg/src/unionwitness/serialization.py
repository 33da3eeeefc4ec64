"""Exact wire formats: numbers as canonical strings, witnesses as JSON objects.

Numbers travel as decimal integer strings ("3") or reduced fractions with
denominator >= 2 ("7/2"); anything else ("4/2", "3/1", "03", "2.5") is
rejected so that the representation of every value is unique.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Mapping

from .bounds import FeasibilityReport
from .errors import InvalidInputError
from .model import Mode, SubsetKey, WeightSystem
from .verify import MaterializedWitness, VerifyReport

_INTEGER = re.compile(r"(?:0|-?[1-9][0-9]*)\Z")
_FRACTION = re.compile(r"(-?[1-9][0-9]*)/([1-9][0-9]*)\Z")


def parse_exact(text: str, what: str = "number") -> Fraction:
    """Parse a canonical exact-number string."""
    if not isinstance(text, str):
        raise InvalidInputError(f"{what} must be a string, got {text!r}")
    if _INTEGER.fullmatch(text):
        return Fraction(int(text))
    match = _FRACTION.fullmatch(text)
    if not match:
        raise InvalidInputError(f"{what} {text!r} is not a canonical integer or p/q string")
    p, q = int(match.group(1)), int(match.group(2))
    value = Fraction(p, q)
    if value.denominator != q or q == 1:
        raise InvalidInputError(f"{what} {text!r} is not in lowest terms")
    return value


def format_exact(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_sizes(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated sizes list such as '1,1,5/2'."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise InvalidInputError(f"sizes list {text!r} is malformed")
    return tuple(parse_exact(p, "size") for p in parts)


def witness_to_dict(w: WeightSystem) -> dict[str, Any]:
    return {
        "weights": [
            {"key": list(key.indices), "w": format_exact(value)}
            for key, value in w.items_sorted()
        ]
    }


def witness_from_dict(data: Mapping, n: int) -> WeightSystem:
    if not isinstance(data, Mapping):
        raise InvalidInputError("witness must be a JSON object")
    body = data.get("witness", data)  # accept a bare witness or a realize payload
    entries = body.get("weights") if isinstance(body, Mapping) else None
    if not isinstance(entries, list):
        raise InvalidInputError("witness object must carry a 'weights' array")
    weights: dict[SubsetKey, Fraction] = {}
    for entry in entries:
        if not isinstance(entry, Mapping) or "key" not in entry or "w" not in entry:
            raise InvalidInputError(f"witness entry {entry!r} must have 'key' and 'w'")
        raw_key = entry["key"]
        if not isinstance(raw_key, list):
            raise InvalidInputError(f"witness key {raw_key!r} must be a list of integers")
        key = SubsetKey(raw_key)
        if key in weights:
            raise InvalidInputError(f"duplicate witness key {key}")
        weights[key] = parse_exact(entry["w"], f"weight of {key}")
    return WeightSystem(n, weights)


def feasibility_to_dict(report: FeasibilityReport) -> dict[str, Any]:
    return {
        "lower": format_exact(report.lower),
        "upper": format_exact(report.upper),
        "sigma": format_exact(report.sigma),
        "a_bar": format_exact(report.a_bar),
        "critical_index": report.critical_index,
    }


def verify_report_to_dict(report: VerifyReport) -> dict[str, Any]:
    return {
        "well_formed": report.well_formed,
        "k_admissible": report.k_admissible,
        "row_sum_ok": list(report.row_sum_ok),
        "union_ok": report.union_ok,
        "lower_bound_slack": format_exact(report.lower_bound_slack),
        "verdict": report.verdict,
    }


def materialization_to_dict(m: MaterializedWitness) -> dict[str, Any]:
    if m.mode is Mode.COUNTING:
        return {"sets": [list(s) for s in m.sets]}
    return {
        "blocks": [
            {
                "key": list(key.indices),
                "start": format_exact(start),
                "len": format_exact(length),
            }
            for key, start, length in m.blocks
        ]
    }


def sets_from_dict(data: Mapping) -> list[list[int]]:
    body = data.get("materialization", data) if isinstance(data, Mapping) else data
    sets = body.get("sets") if isinstance(body, Mapping) else None
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise InvalidInputError("expected a 'sets' array of element-id lists")
    return sets
