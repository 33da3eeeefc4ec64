"""Witness construction with integer weights.

The rational recursion almost works verbatim over the integers; the one
obstacle is the minimum union ceil(sigma/(k-1)) when (k-1) does not divide
sigma.  The fix is a remainder reduction: with r = sigma mod (k-1) and all
sizes positive, subtract 1 from the r smallest sizes.  The shrunk instance
has sum divisible by k-1 and its balanced average floor(a_bar) still
dominates every size, so the rational recursion runs on it producing integer
weights throughout.  Adding one shared element to exactly the r shrunk sets
(key {1..r}, cardinality r < k-1) restores the row sums and lands the union
on floor(a_bar) + 1 = ceil(a_bar).

Above the minimum, the union grows one unit at a time: take any region key
with at least two indices, remove one element from it and give one fresh
element to its head index and one to the remaining indices.  Row sums are
preserved and the union gains exactly 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bounds import bounds, ceil_fraction, feasible
from .errors import CannotIncrementError, InfeasibleError, InvalidInputError
from .measure import RawWeights, _lower_rec, _sorted_with_order, _unsort, _validate_sizes
from .model import (
    ExactNumber,
    Instance,
    Mode,
    SubsetKey,
    WeightSystem,
    check_generated,
    derived_sizes,
)


def _lower_counting_rec(sizes: tuple[Fraction, ...], k: int) -> RawWeights:
    """Minimum-union integer weights for ascending integer ``sizes``."""
    n = len(sizes)
    if n == 0:
        return {}
    if sizes[0] == 0:
        pos = [i for i, a in enumerate(sizes) if a != 0]
        sub = _lower_counting_rec(tuple(sizes[i] for i in pos), k)
        return {tuple(pos[j - 1] + 1 for j in key): v for key, v in sub.items()}
    if k == 2:
        return {(i,): a for i, a in enumerate(sizes, 1)}
    sigma = sum(sizes, Fraction(0))
    a_max = sizes[-1]
    if sigma <= (k - 1) * a_max:
        # set n swallows a minimal witness for the rest, topped up privately
        sub = _lower_counting_rec(sizes[:-1], k - 1)
        w = {key + (n,): v for key, v in sub.items()}
        residual = a_max - sum(sub.values(), Fraction(0))
        assert residual >= 0 and residual.denominator == 1
        if residual:
            w[(n,)] = residual
        return w
    r = int(sigma) % (k - 1)
    if r == 0:
        return _lower_rec(sizes, k, integral=True)
    shrunk = tuple(a - 1 for a in sizes[:r]) + sizes[r:]
    w = _lower_rec(shrunk, k, integral=True)
    head = tuple(range(1, r + 1))
    w[head] = w.get(head, Fraction(0)) + 1
    return w


def realize_lower_counting(sizes: Sequence[int], k: int) -> WeightSystem:
    """Integer k-admissible witness of minimal union for integer row sums.

    The union equals max(max a_i, ceil(sigma/(k-1))) exactly and every
    weight is a nonnegative integer.
    """
    vec = _validate_sizes(sizes)
    if any(a.denominator != 1 for a in vec):
        raise InvalidInputError("counting realization requires integer sizes")
    if isinstance(k, bool) or not isinstance(k, int) or not 2 <= k <= len(vec):
        raise InvalidInputError(f"k must satisfy 2 <= k <= n={len(vec)}, got {k!r}")
    ordered, order = _sorted_with_order(vec)
    raw = _lower_counting_rec(ordered, k)
    w = _unsort(raw, order, len(vec))
    check_generated(w, k)
    assert w.is_integral()
    d = derived_sizes(w)
    assert d.per_set == vec
    assert d.union == max(max(vec), Fraction(ceil_fraction(sum(vec, Fraction(0)) / (k - 1))))
    return w


def increment(w: WeightSystem) -> WeightSystem:
    """Raise the union by exactly one element, keeping row sums.

    Splits one unit of weight off a multi-index region: the key chosen is the
    lexicographically smallest among those of maximum cardinality, and the
    split point is after its first index.  Splitting only shrinks key
    cardinalities, so admissibility is never lost.
    """
    if not w.is_integral():
        raise InvalidInputError("increment operates on integer weight systems")
    candidates = [key for key, value in w.weights.items() if value > 0 and len(key) >= 2]
    if not candidates:
        raise CannotIncrementError("all regions are singletons; union already maximal")
    top = max(len(key) for key in candidates)
    chosen = min(key for key in candidates if len(key) == top)
    result = dict(w.weights)
    result[chosen] = result[chosen] - 1
    if result[chosen] == 0:
        del result[chosen]
    for part in (SubsetKey(chosen.indices[:1]), SubsetKey(chosen.indices[1:])):
        result[part] = result.get(part, Fraction(0)) + 1
    return WeightSystem(w.n, result)


def realize_counting(inst: Instance, a: ExactNumber) -> WeightSystem:
    """Integer witness with the instance's row sums and union ``a``."""
    if inst.mode is not Mode.COUNTING:
        raise InvalidInputError("realize_counting requires a counting-mode instance")
    if not feasible(inst, a):
        report = bounds(inst)
        raise InfeasibleError(
            f"union size {a} outside feasible interval [{report.lower}, {report.upper}]",
            report=report,
        )
    w = realize_lower_counting([int(s) for s in inst.sizes], inst.k)
    steps = int(Fraction(a) - derived_sizes(w).union)
    for _ in range(steps):
        w = increment(w)
    check_generated(w, inst.k)
    assert derived_sizes(w).union == a
    return w
