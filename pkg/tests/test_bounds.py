from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from support import sized_k, rational_sizes, integer_sizes
from unionwitness import (
    Instance,
    InvalidInputError,
    achievable_unions,
    bounds,
    ceil_fraction,
    feasible,
)


def test_k2_forces_disjoint():
    report = bounds(Instance([2, 3, 4], 2, "counting"))
    assert report.lower == 9 and report.upper == 9
    assert report.critical_index == 3  # 9/2 >= 4 > 9/3


def test_five_unit_sets_k5():
    report = bounds(Instance([1, 1, 1, 1, 1], 5, "counting"))
    assert report.a_bar == Fraction(5, 4)
    assert report.lower == 2 and report.upper == 5


def test_triple_unit_sets_k3_matches_oracle():
    achievable = achievable_unions([1, 1, 1], 3)
    report = bounds(Instance([1, 1, 1], 3, "counting"))
    assert report.lower == min(achievable) == 2
    assert report.upper == max(achievable) == 3


def test_measure_lower_is_exact_rational():
    report = bounds(Instance([1, 1, 1], 3, "measure"))
    assert report.lower == Fraction(3, 2)


def test_all_zero_instance():
    report = bounds(Instance([0, 0], 2, "counting"))
    assert report.lower == 0 and report.upper == 0
    assert report.critical_index == 2


def test_critical_index_sentinel_for_equal_sizes():
    assert bounds(Instance([2, 2, 2, 2], 2, "counting")).critical_index == 5


def test_feasible_examples():
    inst = Instance([1, 1, 1], 3, "counting")
    assert feasible(inst, 2)
    assert not feasible(inst, 1)
    assert feasible(Instance([0, 0], 2, "counting"), 0)


def test_feasible_rejects_fractional_count():
    with pytest.raises(InvalidInputError):
        feasible(Instance([1, 1, 1], 3, "counting"), Fraction(5, 2))
    assert feasible(Instance([1, 1, 1], 3, "measure"), Fraction(5, 2))


def test_ceil_fraction():
    assert ceil_fraction(Fraction(5, 4)) == 2
    assert ceil_fraction(Fraction(-5, 4)) == -1
    assert ceil_fraction(Fraction(6, 3)) == 2


@given(sized_k(rational_sizes))
def test_monotone_in_sizes(data):
    sizes, k = data
    inst = Instance(sizes, k, "measure")
    report = bounds(inst)
    for i in range(len(sizes)):
        grown = list(sizes)
        grown[i] += Fraction(1, 3)
        bigger = bounds(Instance(grown, k, "measure"))
        assert bigger.lower >= report.lower
        assert bigger.upper >= report.upper


@given(sized_k(rational_sizes), st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=7))
def test_measure_bounds_scale(data, t):
    sizes, k = data
    base = bounds(Instance(sizes, k, "measure"))
    scaled = bounds(Instance([t * a for a in sizes], k, "measure"))
    assert scaled.lower == t * base.lower
    assert scaled.upper == t * base.upper
    assert scaled.a_bar == t * base.a_bar
    assert scaled.critical_index == base.critical_index


@given(sized_k(integer_sizes))
def test_critical_index_chain(data):
    sizes, k = data
    report = bounds(Instance(sizes, k, "counting"))
    m, sigma, top = report.critical_index, report.sigma, max(sizes)
    if sigma == 0:
        assert m == 2
        return
    assert 2 <= m <= len(sizes) + 1
    assert Fraction(sigma, m - 1) >= top
    assert top > Fraction(sigma, m)
    if m == len(sizes) + 1:
        assert top <= Fraction(sigma, len(sizes))


@given(sized_k(integer_sizes))
def test_counting_lower_uses_exact_ceiling(data):
    sizes, k = data
    report = bounds(Instance(sizes, k, "counting"))
    assert report.lower == max(max(sizes), Fraction(ceil_fraction(report.a_bar)))
    assert report.lower <= report.upper
