"""Core domain model: instances, region keys, weight systems, derived sizes.

The central object is the :class:`WeightSystem`.  For sets A_1..A_n, every
point of the union lives in exactly one "pure region": the set of points
belonging to precisely the A_i with i in some nonempty S ⊆ {1..n}.  A weight
system assigns an exact nonnegative weight (a measure, or an element count)
to each such region key S.  Row sums and the union size are linear in the
weights, which is what makes the whole feasibility problem tractable:

    size of A_i      = sum of w(S) over keys S containing i
    size of the union = sum of all w(S)

A system is *k-admissible* when no key has cardinality >= k; that is exactly
the statement that every intersection of k distinct sets is empty.

All arithmetic is exact (`int` / `fractions.Fraction`).  No floats anywhere:
the feasibility thresholds are non-integral rationals and the contracts are
exact equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import InvalidInputError, MalformedWitnessError

ExactNumber = Union[int, Fraction]


class Mode(str, Enum):
    """Arithmetic mode of an instance: integer counts or rational measures."""

    COUNTING = "counting"
    MEASURE = "measure"


def as_fraction(value: ExactNumber, what: str = "value") -> Fraction:
    """Convert an exact number to Fraction, rejecting floats and other types."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise InvalidInputError(
            f"{what} must be an int or Fraction (exact arithmetic only), got {value!r}"
        )
    return Fraction(value)


@dataclass(frozen=True, order=True)
class SubsetKey:
    """A nonempty subset of {1..n} in canonical (strictly increasing) form.

    Keys compare lexicographically on their index tuples, which is the
    ordering used everywhere deterministic output is required.
    """

    indices: tuple[int, ...]

    def __init__(self, indices: Iterable[int]):
        items = list(indices)
        for i in items:
            if isinstance(i, bool) or not isinstance(i, int) or i < 1:
                raise InvalidInputError(f"subset key indices must be integers >= 1, got {i!r}")
        if not items:
            raise InvalidInputError("subset key must be nonempty")
        canon = tuple(sorted(items))
        if len(set(canon)) != len(canon):
            raise InvalidInputError(f"subset key has duplicate indices: {items}")
        object.__setattr__(self, "indices", canon)

    @classmethod
    def of(cls, *indices: int) -> "SubsetKey":
        return cls(indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class Instance:
    """A problem instance: prescribed sizes, intersection bound k, and mode.

    Invariants: n >= 2, 2 <= k <= n, sizes nonnegative, and integer sizes in
    counting mode.
    """

    sizes: tuple[Fraction, ...]
    k: int
    mode: Mode

    def __init__(self, sizes: Sequence[ExactNumber], k: int, mode: Mode | str):
        mode = Mode(mode)
        vec = tuple(as_fraction(a, "size") for a in sizes)
        if len(vec) < 2:
            raise InvalidInputError(f"need at least 2 sets, got {len(vec)}")
        if any(a < 0 for a in vec):
            raise InvalidInputError(f"sizes must be nonnegative, got {list(sizes)}")
        if isinstance(k, bool) or not isinstance(k, int):
            raise InvalidInputError(f"k must be an integer, got {k!r}")
        if not 2 <= k <= len(vec):
            raise InvalidInputError(f"k must satisfy 2 <= k <= n={len(vec)}, got {k}")
        if mode is Mode.COUNTING and any(a.denominator != 1 for a in vec):
            raise InvalidInputError("counting mode requires integer sizes")
        object.__setattr__(self, "sizes", vec)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "mode", mode)

    @property
    def n(self) -> int:
        return len(self.sizes)


@dataclass(frozen=True)
class WeightSystem:
    """Sparse map from region keys to exact weights over ground indices 1..n.

    Construction validates the structure (keys inside {1..n}) but not the
    sign of the weights; :func:`normalize` is the operation that rejects
    negative weights and drops explicit zeros.  Everything produced by the
    realizers in this package is normalized: strictly positive weights only.
    """

    n: int
    weights: Mapping[SubsetKey, Fraction]

    def __init__(self, n: int, weights: Mapping):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidInputError(f"dimension n must be a nonnegative integer, got {n!r}")
        table: dict[SubsetKey, Fraction] = {}
        for raw_key, raw_value in weights.items():
            key = raw_key if isinstance(raw_key, SubsetKey) else SubsetKey(raw_key)
            if key.indices[-1] > n:
                raise InvalidInputError(f"key {key} exceeds dimension n={n}")
            if key in table:
                raise InvalidInputError(f"duplicate key {key} after canonicalization")
            table[key] = as_fraction(raw_value, f"weight of {key}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", table)

    def items_sorted(self) -> list[tuple[SubsetKey, Fraction]]:
        """Entries in lexicographic key order (the canonical output order)."""
        return sorted(self.weights.items())

    def support_cardinalities(self) -> set[int]:
        """Cardinalities of keys carrying nonzero weight."""
        return {len(key) for key, value in self.weights.items() if value != 0}

    def is_admissible(self, k: int) -> bool:
        """True when no nonzero weight sits on a key of cardinality >= k."""
        return all(len(key) < k for key, value in self.weights.items() if value != 0)

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.weights.values())

    def __bool__(self) -> bool:
        return any(value != 0 for value in self.weights.values())


@dataclass(frozen=True)
class DerivedSizes:
    """Row sums and union size computed from a weight system."""

    per_set: tuple[Fraction, ...]
    union: Fraction


def derived_sizes(w: WeightSystem) -> DerivedSizes:
    """Compute per-set sizes and the union size of a weight system.

    per_set[i-1] sums the weights of all keys containing i; union sums every
    weight.  Exact arithmetic, total on well-formed input.
    """
    per_set = [Fraction(0)] * w.n
    union = Fraction(0)
    for key, value in w.weights.items():
        union += value
        for i in key:
            per_set[i - 1] += value
    return DerivedSizes(per_set=tuple(per_set), union=union)


def normalize(w: WeightSystem) -> WeightSystem:
    """Drop zero-weight entries; reject negative weights.

    The result is equal to the input as a function on region keys.
    """
    for key, value in w.weights.items():
        if value < 0:
            raise MalformedWitnessError(f"negative weight {value} on key {key}")
    return WeightSystem(w.n, {key: value for key, value in w.weights.items() if value != 0})


def check_generated(w: WeightSystem, k: int) -> None:
    """Internal sanity assertions for witnesses produced by the realizers.

    Checks the union lower bound  union >= (sum of row sums)/(k-1)  that every
    k-admissible nonnegative system satisfies, and the equality analysis: a
    system whose union sits exactly on that bound is supported entirely on
    keys of cardinality k-1.  A failure here is a bug in a construction, not
    a user error.
    """
    d = derived_sizes(w)
    assert all(value > 0 for value in w.weights.values()), "generated witness not normalized"
    assert w.is_admissible(k), "generated witness not admissible"
    bound = sum(d.per_set, Fraction(0)) / (k - 1)
    assert d.union >= bound, "generated witness violates the union lower bound"
    if d.union == bound:
        assert all(len(key) == k - 1 for key in w.weights), (
            "witness hits the lower bound but is not concentrated on (k-1)-fold regions"
        )
