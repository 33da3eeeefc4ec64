"""Shared strategies and instance generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from unionwitness import Instance, Mode, WeightSystem


def all_keys(n: int, max_card: int) -> list[tuple[int, ...]]:
    keys: list[tuple[int, ...]] = []
    for card in range(1, max_card + 1):
        keys.extend(combinations(range(1, n + 1), card))
    return keys


@st.composite
def weight_systems(draw, max_n=6, integer=False, max_card=None, max_weight=4):
    """Random weight systems; admissibility controlled via ``max_card``."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    cap = n if max_card is None else min(max_card, n)
    keys = all_keys(n, cap)
    chosen = draw(
        st.lists(st.sampled_from(keys), unique=True, min_size=0, max_size=min(8, len(keys)))
    )
    if integer:
        value = st.integers(min_value=1, max_value=max_weight)
    else:
        value = st.fractions(
            min_value=Fraction(1, 12), max_value=Fraction(max_weight), max_denominator=12
        )
    weights = {key: draw(value) for key in chosen}
    return WeightSystem(n, weights)


@st.composite
def admissible_pairs(draw, max_n=6, integer=False):
    """(WeightSystem, k) with the system k-admissible by construction."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    k = draw(st.integers(min_value=2, max_value=n))
    keys = all_keys(n, k - 1)
    chosen = draw(st.lists(st.sampled_from(keys), unique=True, max_size=min(8, len(keys))))
    if integer:
        value = st.integers(min_value=1, max_value=4)
    else:
        value = st.fractions(min_value=Fraction(1, 12), max_value=Fraction(4), max_denominator=12)
    return WeightSystem(n, {key: draw(value) for key in chosen}), k


rational_sizes = st.lists(
    st.fractions(min_value=0, max_value=Fraction(12), max_denominator=12),
    min_size=2,
    max_size=7,
)

integer_sizes = st.lists(st.integers(min_value=0, max_value=8), min_size=2, max_size=7)


@st.composite
def sized_k(draw, sizes_strategy):
    sizes = draw(sizes_strategy)
    k = draw(st.integers(min_value=2, max_value=len(sizes)))
    return sizes, k


def random_rational_instance(rng: random.Random, max_n=8, max_denominator=12) -> Instance:
    n = rng.randint(2, max_n)
    k = rng.randint(2, n)
    sizes = []
    for _ in range(n):
        q = rng.randint(1, max_denominator)
        p = rng.randint(0, 3 * q)
        sizes.append(Fraction(p, q))
    return Instance(sizes, k, Mode.MEASURE)


def counting_grid(max_n=5, max_size=3):
    """Every instance with n in [2,max_n], k in [2,n], ascending sizes <= max_size."""
    for n in range(2, max_n + 1):

        def ascending(prefix, lo):
            if len(prefix) == n:
                yield tuple(prefix)
                return
            for v in range(lo, max_size + 1):
                yield from ascending(prefix + [v], v)

        for sizes in ascending([], 0):
            for k in range(2, n + 1):
                yield sizes, k
