"""Independent verification and explicit materialization of witnesses.

This module deliberately depends only on the core model, never on the
realizers: it recomputes row sums and the union by direct summation so that
`verify(realize(...))` is a genuine two-route check rather than the same
code reading its own output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from .errors import InvalidInputError
from .model import (
    ExactNumber,
    Instance,
    Mode,
    SubsetKey,
    WeightSystem,
    as_fraction,
    normalize,
)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a witness against an instance and a union target.

    All failures are fields, never exceptions; ``verdict`` is the conjunction
    of every check.  ``lower_bound_slack`` is union - sigma/(k-1), which is
    nonnegative for every genuine witness.
    """

    well_formed: bool
    k_admissible: bool
    row_sum_ok: tuple[bool, ...]
    union_ok: bool
    lower_bound_slack: Fraction
    verdict: bool


def verify(w: WeightSystem, inst: Instance, a: ExactNumber) -> VerifyReport:
    """Check a witness: admissibility, exact row sums, exact union size."""
    target = as_fraction(a, "target union size")
    n = inst.n
    well_formed = w.n == n and all(value >= 0 for value in w.weights.values())
    if inst.mode is Mode.COUNTING and not w.is_integral():
        well_formed = False
    k_admissible = all(
        len(key) < inst.k for key, value in w.weights.items() if value != 0
    )
    per_set = [Fraction(0)] * n
    union = Fraction(0)
    for key, value in w.weights.items():
        union += value
        for i in key:
            if i <= n:
                per_set[i - 1] += value
    row_sum_ok = tuple(per_set[i] == inst.sizes[i] for i in range(n))
    union_ok = union == target
    sigma = sum(inst.sizes, Fraction(0))
    slack = union - sigma / (inst.k - 1)
    verdict = well_formed and k_admissible and all(row_sum_ok) and union_ok
    return VerifyReport(
        well_formed=well_formed,
        k_admissible=k_admissible,
        row_sum_ok=row_sum_ok,
        union_ok=union_ok,
        lower_bound_slack=slack,
        verdict=verdict,
    )


@dataclass(frozen=True)
class MaterializedWitness:
    """Explicit realization of a weight system.

    Counting mode: ``sets`` lists the element ids of each A_i over the
    universe {1..union}, and ``universe`` records each element's owning
    region key.  Measure mode: ``blocks`` are disjoint intervals laid
    end-to-end from 0, one per region, as (key, start, length).
    """

    mode: Mode
    sets: tuple[tuple[int, ...], ...] | None = None
    universe: tuple[tuple[int, SubsetKey], ...] | None = None
    blocks: tuple[tuple[SubsetKey, Fraction, Fraction], ...] | None = None


def materialize(w: WeightSystem, mode: Mode | str) -> MaterializedWitness:
    """Expand a weight system into explicit sets (counting) or blocks (measure).

    Output is deterministic: regions are processed in lexicographic key
    order, element ids are consecutive positive integers, intervals start
    at 0 and abut.
    """
    mode = Mode(mode)
    clean = normalize(w)
    entries = clean.items_sorted()
    if mode is Mode.COUNTING:
        if not clean.is_integral():
            raise InvalidInputError("counting materialization requires integer weights")
        sets: list[list[int]] = [[] for _ in range(clean.n)]
        universe: list[tuple[int, SubsetKey]] = []
        next_id = 1
        for key, value in entries:
            for element in range(next_id, next_id + int(value)):
                universe.append((element, key))
                for i in key:
                    sets[i - 1].append(element)
            next_id += int(value)
        return MaterializedWitness(
            mode=mode,
            sets=tuple(tuple(s) for s in sets),
            universe=tuple(universe),
        )
    blocks: list[tuple[SubsetKey, Fraction, Fraction]] = []
    start = Fraction(0)
    for key, value in entries:
        blocks.append((key, start, value))
        start += value
    return MaterializedWitness(mode=mode, blocks=tuple(blocks))


def decompose(sets: Sequence[Sequence[Hashable]]) -> WeightSystem:
    """Recover region weights from explicit finite sets.

    The weight of key S counts the elements belonging to exactly the sets
    indexed by S.  Element ids only need to support equality/hashing;
    elements outside every set never appear in the input and are ignored.
    """
    n = len(sets)
    membership: dict[Hashable, list[int]] = {}
    for i, elements in enumerate(sets, 1):
        seen = set()
        for element in elements:
            if element in seen:
                raise InvalidInputError(f"set {i} lists element {element!r} twice")
            seen.add(element)
            membership.setdefault(element, []).append(i)
    weights: dict[SubsetKey, Fraction] = {}
    for indices in membership.values():
        key = SubsetKey(indices)
        weights[key] = weights.get(key, Fraction(0)) + 1
    return WeightSystem(n, weights)
