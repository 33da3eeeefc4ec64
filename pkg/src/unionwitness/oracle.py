"""Exhaustive ground truth for tiny integer instances.

The oracle enumerates every k-admissible integer weight system with the
prescribed row sums and reports the exact set of achievable union sizes.  It
shares nothing with the constructive realizers, which is the point: on small
instances the two routes must agree exactly.

Enumeration walks the admissible keys in (cardinality descending, then
lexicographic) order, assigning each key a weight between 0 and the smallest
remaining row budget among its indices.  Larger keys go first because they
consume several budgets at once and prune hardest.  States are memoized on
(position, remaining budgets) with achievable-union sets packed into bitmask
integers, so the cost is polynomial in the number of distinct budget vectors
rather than in the number of weight systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .bounds import ceil_fraction
from .errors import GuardrailExceededError, InvalidInputError
from .model import SubsetKey
from .verify import decompose

MAX_N = 6
MAX_SIGMA = 24
MAX_COUNTEREXAMPLE_N = 7


def _validated(sizes: Sequence[int], k: int) -> tuple[tuple[int, ...], int]:
    vec = []
    for a in sizes:
        if isinstance(a, bool) or not isinstance(a, int) or a < 0:
            raise InvalidInputError(f"oracle sizes must be nonnegative integers, got {a!r}")
        vec.append(a)
    n = len(vec)
    if n < 2:
        raise InvalidInputError("oracle needs at least 2 sizes")
    if isinstance(k, bool) or not isinstance(k, int) or not 2 <= k <= n:
        raise InvalidInputError(f"k must satisfy 2 <= k <= n={n}, got {k!r}")
    if n > MAX_N or sum(vec) > MAX_SIGMA:
        raise GuardrailExceededError(
            f"instance too large for exhaustive enumeration "
            f"(limits: n <= {MAX_N}, total size <= {MAX_SIGMA})"
        )
    return tuple(vec), n


def _ordered_keys(n: int, k: int, allowed: Iterable[int] | None) -> list[tuple[int, ...]]:
    cards = set(range(1, k))
    if allowed is not None:
        cards &= set(allowed)
    keys: list[tuple[int, ...]] = []
    for card in sorted(cards, reverse=True):
        keys.extend(combinations(range(n), card))
    return keys


def _achievable_mask(sizes: tuple[int, ...], keys: list[tuple[int, ...]]) -> int:
    """Bitmask of achievable unions: bit u is set iff union u is realizable."""
    # rows that appear in no later key must have exhausted budgets already
    coverage: list[frozenset[int]] = [frozenset()] * (len(keys) + 1)
    for j in range(len(keys) - 1, -1, -1):
        coverage[j] = coverage[j + 1] | frozenset(keys[j])
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def rec(j: int, budgets: tuple[int, ...]) -> int:
        if j == len(keys):
            return 1 if not any(budgets) else 0
        state = (j, budgets)
        cached = memo.get(state)
        if cached is not None:
            return cached
        if any(budgets[i] for i in range(len(budgets)) if i not in coverage[j]):
            memo[state] = 0
            return 0
        rows = keys[j]
        cap = min(budgets[i] for i in rows)
        scratch = list(budgets)
        mask = 0
        for weight in range(cap + 1):
            sub = rec(j + 1, tuple(scratch))
            mask |= sub << weight
            for i in rows:
                scratch[i] -= 1
        memo[state] = mask
        return mask

    return rec(0, sizes)


def achievable_unions(sizes: Sequence[int], k: int) -> set[int]:
    """Exact set of union sizes over all k-admissible integer systems."""
    vec, n = _validated(sizes, k)
    mask = _achievable_mask(vec, _ordered_keys(n, k, None))
    return {u for u in range(sum(vec) + 1) if mask >> u & 1}


def achievable_unions_restricted(
    sizes: Sequence[int], k: int, allowed_cardinalities: Iterable[int]
) -> set[int]:
    """Achievable unions when regions are limited to given cardinalities."""
    vec, n = _validated(sizes, k)
    mask = _achievable_mask(vec, _ordered_keys(n, k, allowed_cardinalities))
    return {u for u in range(sum(vec) + 1) if mask >> u & 1}


def witness_counts(
    sizes: Sequence[int], k: int, allowed_cardinalities: Iterable[int] | None = None
) -> dict[int, int]:
    """Number of distinct weight systems per achievable union size.

    Debugging aid, not part of any contract.
    """
    vec, n = _validated(sizes, k)
    keys = _ordered_keys(n, k, allowed_cardinalities)
    memo: dict[tuple[int, tuple[int, ...]], dict[int, int]] = {}

    def rec(j: int, budgets: tuple[int, ...]) -> dict[int, int]:
        if j == len(keys):
            return {0: 1} if not any(budgets) else {}
        state = (j, budgets)
        cached = memo.get(state)
        if cached is not None:
            return cached
        rows = keys[j]
        cap = min(budgets[i] for i in rows)
        scratch = list(budgets)
        counts: dict[int, int] = {}
        for weight in range(cap + 1):
            for u, c in rec(j + 1, tuple(scratch)).items():
                counts[u + weight] = counts.get(u + weight, 0) + c
            for i in rows:
                scratch[i] -= 1
        memo[state] = counts
        return counts

    return dict(sorted(rec(0, vec).items()))


@dataclass(frozen=True)
class CounterexampleReport:
    """Why the two-layer sweep has no counting analogue at its lower end.

    For n unit-size sets with k = n, the smallest achievable integer union
    is 2, yet no integer system restricted to region cardinalities
    {n-1, n-2} achieves it: every union-2 witness splits {1..n} into exactly
    two complementary region keys, whose cardinalities sum to n and hence
    cannot both lie in {n-1, n-2} once n >= 5.
    """

    n: int
    counting_lower: int
    restricted_cardinalities: frozenset[int]
    restricted_achievable: frozenset[int]
    unrestricted_achievable: frozenset[int]
    union2_supports: tuple[frozenset[SubsetKey], ...]

    @property
    def fails_for_counting(self) -> bool:
        return (
            self.counting_lower in self.unrestricted_achievable
            and self.counting_lower not in self.restricted_achievable
        )


def addendum_counterexample(n: int) -> CounterexampleReport:
    """Build the full failure report for the all-ones instance with k = n."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 5:
        raise InvalidInputError(f"counterexample needs n >= 5, got {n!r}")
    if n > MAX_COUNTEREXAMPLE_N:
        raise GuardrailExceededError(
            f"counterexample limited to n <= {MAX_COUNTEREXAMPLE_N}, got {n}"
        )
    sizes = tuple([1] * n)
    lower = ceil_fraction(Fraction(n, n - 1))
    # all-ones budgets keep the enumeration tiny, so this op has its own
    # (larger) n guardrail and calls the enumerator directly
    full_mask = _achievable_mask(sizes, _ordered_keys(n, n, None))
    restricted_mask = _achievable_mask(sizes, _ordered_keys(n, n, {n - 1, n - 2}))
    unrestricted = frozenset(u for u in range(n + 1) if full_mask >> u & 1)
    restricted = frozenset(u for u in range(n + 1) if restricted_mask >> u & 1)
    # classify all union-2 witnesses by assigning each unit set to one of
    # two elements and decomposing the resulting set system
    supports: set[frozenset[SubsetKey]] = set()
    for assignment in product((0, 1), repeat=n):
        if len(set(assignment)) < 2:
            continue  # union would be 1, and the full key is inadmissible anyway
        system = decompose([["x" if pick == 0 else "y"] for pick in assignment])
        assert system.is_admissible(n)
        supports.add(frozenset(system.weights))
    for support in supports:
        assert len(support) == 2
        cards = sorted(len(key) for key in support)
        assert cards[0] + cards[1] == n
    return CounterexampleReport(
        n=n,
        counting_lower=lower,
        restricted_cardinalities=frozenset({n - 1, n - 2}),
        restricted_achievable=restricted,
        unrestricted_achievable=unrestricted,
        union2_supports=tuple(
            sorted(supports, key=lambda s: sorted(key.indices for key in s))
        ),
    )
