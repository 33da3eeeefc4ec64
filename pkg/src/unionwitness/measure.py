"""Witness construction with rational weights.

Given nonnegative rational sizes and the intersection bound k, these builders
produce k-admissible weight systems with the prescribed row sums and any
feasible union size.  The interesting part is the minimum-union witness,
built by a recursion on (n, k); everything above the minimum is reached by
convex blending with the disjoint witness.

Minimum-union recursion, on sizes sorted ascending (a_1 <= ... <= a_n) with
zero sizes stripped beforehand:

* k = 2: the sets must be pairwise disjoint.  Singleton keys.
* a_bar = sigma/(k-1) <= a_n: the n-th set can swallow the rest.  Build a
  minimal witness for a_1..a_{n-1} with bound k-1, put all of it inside set
  n (append index n to every key), and top set n up with a fresh private
  block.  The union equals a_n.
* a_bar > a_n and k = n: closed form.  Put weight x_i = a_bar - a_i on the
  complement of {i}; the n row-sum equations have exactly this solution, and
  the case condition max a_i <= a_bar is what makes it nonnegative.
* a_bar > a_n, k < n, b = a_bar - a_n <= a_1: shave b off the k-1 smallest
  sizes.  The shaved instance satisfies a_bar' = a_n = max, so the previous
  case applies; afterwards glue one common block of weight b shared by
  exactly the sets 1..k-1 (key {1..k-1}, cardinality k-1, still admissible).
* a_bar > a_n, k < n, b > a_1: shaving would go negative, so remove set 1
  entirely: subtract a_1 from sizes 2..k-1, recurse on the n-1 remaining
  sets with the same k, then glue a common block of weight a_1 shared by
  sets 1..k-1.  Set 1 consists of that block alone.

Each step preserves row sums and admissibility exactly and yields union
max(a_n, a_bar); assertions re-check this at every level.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .bounds import bounds, feasible
from .errors import (
    AddendumPreconditionError,
    ExtremeCaseError,
    InfeasibleError,
    InterpolationRangeError,
    InvalidInputError,
    OverdrawError,
    PairMismatchError,
)
from .model import (
    ExactNumber,
    Instance,
    Mode,
    SubsetKey,
    WeightSystem,
    as_fraction,
    check_generated,
    derived_sizes,
)

RawWeights = dict[tuple[int, ...], Fraction]


def _validate_sizes(sizes: Sequence[ExactNumber], minimum_n: int = 2) -> tuple[Fraction, ...]:
    vec = tuple(as_fraction(a, "size") for a in sizes)
    if len(vec) < minimum_n:
        raise InvalidInputError(f"need at least {minimum_n} sizes, got {len(vec)}")
    if any(a < 0 for a in vec):
        raise InvalidInputError("sizes must be nonnegative")
    return vec


def _assert_level(w: RawWeights, sizes: tuple[Fraction, ...], k: int) -> None:
    # construction invariants, re-checked at every recursion level
    assert all(v > 0 for v in w.values()), "zero or negative weight emitted"
    assert all(1 <= len(key) < k for key in w), "inadmissible key"
    per_set = [Fraction(0)] * len(sizes)
    union = Fraction(0)
    for key, v in w.items():
        union += v
        for i in key:
            per_set[i - 1] += v
    assert tuple(per_set) == sizes, "row sums drifted during construction"
    if sizes:
        sigma = sum(sizes, Fraction(0))
        assert union == max(max(sizes), sigma / (k - 1)), "union is not the minimum"


def _lower_rec(sizes: tuple[Fraction, ...], k: int, integral: bool = False) -> RawWeights:
    """Minimum-union weights for ascending ``sizes``; keys are index tuples.

    ``integral`` asserts that every weight stays an integer, which the caller
    guarantees by arranging (k-1) | sigma; a violation is a bug.
    """
    n = len(sizes)
    if n == 0:
        return {}
    if sizes[0] == 0:
        # zeros sort to the front; realize the positive part and shift indices
        pos = [i for i, a in enumerate(sizes) if a != 0]
        sub = _lower_rec(tuple(sizes[i] for i in pos), k, integral)
        w = {tuple(pos[j - 1] + 1 for j in key): v for key, v in sub.items()}
    elif k == 2:
        w = {(i,): a for i, a in enumerate(sizes, 1)}
    else:
        sigma = sum(sizes, Fraction(0))
        a_bar = sigma / (k - 1)
        a_max = sizes[-1]
        if a_bar <= a_max:
            sub = _lower_rec(sizes[:-1], k - 1, integral)
            w = {key + (n,): v for key, v in sub.items()}
            residual = a_max - sum(sub.values(), Fraction(0))
            assert residual >= 0
            if residual:
                w[(n,)] = residual
        elif k == n:
            # closed form: weight a_bar - a_i on the complement of {i}
            w = {}
            for i, a in enumerate(sizes, 1):
                x = a_bar - a
                if x:
                    w[tuple(j for j in range(1, n + 1) if j != i)] = x
        else:
            b = a_bar - a_max
            if b <= sizes[0]:
                shaved = tuple(a - b for a in sizes[: k - 1]) + sizes[k - 1 :]
                w = _lower_rec(shaved, k, integral)
                head = tuple(range(1, k))
                w[head] = w.get(head, Fraction(0)) + b
            else:
                a_1 = sizes[0]
                reduced = tuple(a - a_1 for a in sizes[1 : k - 1]) + sizes[k - 1 :]
                sub = _lower_rec(reduced, k, integral)
                w = {tuple(j + 1 for j in key): v for key, v in sub.items()}
                w[tuple(range(1, k))] = a_1
    if integral:
        assert all(v.denominator == 1 for v in w.values()), "integrality lost"
    _assert_level(w, sizes, k)
    return w


def _sorted_with_order(sizes: tuple[Fraction, ...]) -> tuple[tuple[Fraction, ...], list[int]]:
    order = sorted(range(len(sizes)), key=sizes.__getitem__)  # stable for ties
    return tuple(sizes[i] for i in order), order


def _unsort(raw: RawWeights, order: list[int], n: int) -> WeightSystem:
    weights = {
        SubsetKey(order[j - 1] + 1 for j in key): value for key, value in raw.items()
    }
    return WeightSystem(n, weights)


def realize_lower(sizes: Sequence[ExactNumber], k: int, *, integral: bool = False) -> WeightSystem:
    """Build a k-admissible witness of minimal union for the given row sums.

    The union equals max(max a_i, sigma/(k-1)) exactly.
    """
    vec = _validate_sizes(sizes)
    if isinstance(k, bool) or not isinstance(k, int) or not 2 <= k <= len(vec):
        raise InvalidInputError(f"k must satisfy 2 <= k <= n={len(vec)}, got {k!r}")
    ordered, order = _sorted_with_order(vec)
    raw = _lower_rec(ordered, k, integral)
    w = _unsort(raw, order, len(vec))
    check_generated(w, k)
    return w


def realize_upper(sizes: Sequence[ExactNumber]) -> WeightSystem:
    """The disjoint witness: weight a_i on the singleton {i}; union = sigma."""
    vec = _validate_sizes(sizes)
    return WeightSystem(
        len(vec), {SubsetKey.of(i): a for i, a in enumerate(vec, 1) if a != 0}
    )


def solve_extreme(sizes: Sequence[ExactNumber]) -> WeightSystem:
    """Closed-form witness for the fully saturated case k = n.

    Requires max a_i <= a_bar = sigma/(n-1); then weight x_i = a_bar - a_i on
    the complement of {i} gives row sums a and union a_bar.
    """
    vec = _validate_sizes(sizes)
    n = len(vec)
    sigma = sum(vec, Fraction(0))
    a_bar = sigma / (n - 1)
    if max(vec) > a_bar:
        raise ExtremeCaseError(
            f"max size {max(vec)} exceeds the balanced average {a_bar}; "
            "the saturated closed form does not apply"
        )
    weights = {}
    for i, a in enumerate(vec, 1):
        x = a_bar - a
        if x:
            weights[SubsetKey(j for j in range(1, n + 1) if j != i)] = x
    w = WeightSystem(n, weights)
    check_generated(w, n)
    return w


def _row_sums(w: WeightSystem) -> tuple[Fraction, ...]:
    return derived_sizes(w).per_set


def interpolate(w_lo: WeightSystem, w_hi: WeightSystem, a: ExactNumber) -> WeightSystem:
    """Convex blend of two witnesses with equal row sums, hitting union ``a``.

    Region weights depend linearly on the blend parameter, so picking
    t = (u_hi - a)/(u_hi - u_lo) lands the union exactly on ``a`` while row
    sums and admissibility carry over unchanged.
    """
    target = as_fraction(a, "target union size")
    if w_lo.n != w_hi.n or _row_sums(w_lo) != _row_sums(w_hi):
        raise PairMismatchError("blend endpoints must have identical row sums")
    u_lo = derived_sizes(w_lo).union
    u_hi = derived_sizes(w_hi).union
    low, high = min(u_lo, u_hi), max(u_lo, u_hi)
    if not low <= target <= high:
        raise InterpolationRangeError(
            f"target {target} outside blend range [{low}, {high}]"
        )
    if u_lo == u_hi:
        return normalize_copy(w_lo)
    t = (u_hi - target) / (u_hi - u_lo)
    merged: dict[SubsetKey, Fraction] = {}
    for key, value in w_lo.weights.items():
        merged[key] = merged.get(key, Fraction(0)) + t * value
    for key, value in w_hi.weights.items():
        merged[key] = merged.get(key, Fraction(0)) + (1 - t) * value
    return WeightSystem(w_lo.n, {key: v for key, v in merged.items() if v != 0})


def normalize_copy(w: WeightSystem) -> WeightSystem:
    return WeightSystem(w.n, {key: v for key, v in w.weights.items() if v != 0})


def leak(w: WeightSystem, drains: Mapping, k: int) -> WeightSystem:
    """Redistribute weight downward from (k-1)-fold regions.

    For each drained key S (cardinality k-1) with amount x: remove x from S
    and add x/(k-2) to each of the k-1 subsets of S of cardinality k-2.  Rows
    inside S lose x once and regain it across the k-2 kept subsets, so row
    sums are unchanged, while the union grows by exactly x/(k-2).
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 3:
        raise InvalidInputError("leaking needs k >= 3 (no cardinality-0 target for k = 2)")
    plan: dict[SubsetKey, Fraction] = {}
    for raw_key, raw_value in drains.items():
        key = raw_key if isinstance(raw_key, SubsetKey) else SubsetKey(raw_key)
        amount = as_fraction(raw_value, f"drain on {key}")
        if len(key) != k - 1:
            raise InvalidInputError(f"drain key {key} must have cardinality k-1={k - 1}")
        if amount < 0:
            raise InvalidInputError(f"drain on {key} must be nonnegative, got {amount}")
        available = w.weights.get(key, Fraction(0))
        if amount > available:
            raise OverdrawError(f"drain {amount} on {key} exceeds available weight {available}")
        plan[key] = amount
    result = dict(w.weights)
    for key, amount in plan.items():
        if amount == 0:
            continue
        result[key] = result[key] - amount
        if result[key] == 0:
            del result[key]
        share = amount / (k - 2)
        for kept in combinations(key.indices, k - 2):
            sub = SubsetKey(kept)
            result[sub] = result.get(sub, Fraction(0)) + share
    return WeightSystem(w.n, result)


def realize_addendum(sizes: Sequence[ExactNumber], k: int, a: ExactNumber) -> WeightSystem:
    """Two-layer witness: union ``a``, support only on cardinalities k-1, k-2.

    Valid exactly for sigma/(k-1) <= a <= sigma/(k-2) when the minimum-union
    witness is concentrated on (k-1)-fold regions (i.e. sigma/(k-1) >= max).
    Start from that witness and leak a total of (k-2)*(a - sigma/(k-1)),
    draining keys in lexicographic order.
    """
    vec = _validate_sizes(sizes)
    target = as_fraction(a, "target union size")
    if isinstance(k, bool) or not isinstance(k, int) or not 3 <= k <= len(vec):
        raise InvalidInputError(f"two-layer construction needs 3 <= k <= n, got k={k!r}")
    sigma = sum(vec, Fraction(0))
    if not sigma / (k - 1) >= max(vec):
        raise AddendumPreconditionError(
            f"requires sigma/(k-1)={sigma / (k - 1)} >= max size {max(vec)}"
        )
    if not sigma / (k - 1) <= target <= sigma / (k - 2):
        raise AddendumPreconditionError(
            f"target {target} outside sweep window [{sigma / (k - 1)}, {sigma / (k - 2)}]"
        )
    w = realize_lower(vec, k)
    assert w.support_cardinalities() <= {k - 1}
    remaining = (k - 2) * (target - sigma / (k - 1))
    drains: dict[SubsetKey, Fraction] = {}
    for key, value in w.items_sorted():
        if remaining == 0:
            break
        take = min(value, remaining)
        drains[key] = take
        remaining -= take
    assert remaining == 0, "drain budget exceeds total available weight"
    out = leak(w, drains, k)
    check_generated(out, k)
    assert out.support_cardinalities() <= {k - 1, k - 2}
    assert derived_sizes(out).union == target
    return out


def realize_measure(inst: Instance, a: ExactNumber) -> WeightSystem:
    """Witness with the instance's row sums and union ``a`` (measure mode)."""
    if inst.mode is not Mode.MEASURE:
        raise InvalidInputError("realize_measure requires a measure-mode instance")
    target = as_fraction(a, "target union size")
    if not feasible(inst, target):
        report = bounds(inst)
        raise InfeasibleError(
            f"union size {target} outside feasible interval "
            f"[{report.lower}, {report.upper}]",
            report=report,
        )
    w_lo = realize_lower(inst.sizes, inst.k)
    w_hi = realize_upper(inst.sizes)
    w = interpolate(w_lo, w_hi, target)
    check_generated(w, inst.k)
    assert derived_sizes(w).union == target
    return w
