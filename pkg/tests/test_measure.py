from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from support import rational_sizes, sized_k
from unionwitness import (
    AddendumPreconditionError,
    ExtremeCaseError,
    InfeasibleError,
    Instance,
    InterpolationRangeError,
    InvalidInputError,
    OverdrawError,
    PairMismatchError,
    WeightSystem,
    derived_sizes,
    interpolate,
    leak,
    realize_addendum,
    realize_lower,
    realize_measure,
    realize_upper,
    solve_extreme,
    verify,
)


def rows(w):
    return derived_sizes(w).per_set


def union(w):
    return derived_sizes(w).union


class TestSolveExtreme:
    def test_closed_form_112(self):
        # x_i = a_bar - a_i = (1, 1, 0) on complements of {i}
        w = solve_extreme([1, 1, 2])
        assert w == WeightSystem(3, {(2, 3): 1, (1, 3): 1})
        assert union(w) == 2

    def test_closed_form_unit_triple(self):
        w = solve_extreme([1, 1, 1])
        assert w == WeightSystem(3, {pair: Fraction(1, 2) for pair in [(1, 2), (1, 3), (2, 3)]})
        assert union(w) == Fraction(3, 2)

    def test_all_zero(self):
        w = solve_extreme([0, 0])
        assert not w and union(w) == 0

    def test_precondition(self):
        with pytest.raises(ExtremeCaseError):
            solve_extreme([1, 1, 5])


class TestRealizeLower:
    def test_balanced_222(self):
        # unique solution of the three row-sum equations on pair keys
        w = realize_lower([2, 2, 2], 3)
        assert w == WeightSystem(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})

    def test_dominant_size(self):
        w = realize_lower([1, 1, 5], 3)
        assert union(w) == 5  # max size wins over a_bar = 7/2
        assert rows(w) == (1, 1, 5)
        report = verify(w, Instance([1, 1, 5], 3, "measure"), 5)
        assert report.verdict and report.lower_bound_slack > 0

    def test_all_zero(self):
        assert not realize_lower([0] * 4, 3)

    def test_invalid_k(self):
        with pytest.raises(InvalidInputError):
            realize_lower([1, 1], 3)
        with pytest.raises(InvalidInputError):
            realize_lower([1, 1], 1)


class TestRealizeUpper:
    def test_examples(self):
        assert realize_upper([2, 3]) == WeightSystem(2, {(1,): 2, (2,): 3})
        assert realize_upper([0, 1]) == WeightSystem(2, {(2,): 1})
        assert union(realize_upper([1, 1, 1])) == 3


class TestInterpolate:
    def test_endpoints(self):
        lo = realize_lower([2, 2, 2], 3)
        hi = realize_upper([2, 2, 2])
        assert interpolate(lo, hi, 3) == lo
        assert interpolate(lo, hi, 6) == hi

    def test_midpoint_blend(self):
        lo = realize_lower([2, 2, 2], 3)
        hi = realize_upper([2, 2, 2])
        mid = interpolate(lo, hi, Fraction(9, 2))
        assert rows(mid) == (2, 2, 2)
        assert union(mid) == Fraction(9, 2)
        assert mid.is_admissible(3)

    def test_range_error(self):
        lo = realize_lower([2, 2, 2], 3)
        hi = realize_upper([2, 2, 2])
        with pytest.raises(InterpolationRangeError):
            interpolate(lo, hi, 7)

    def test_mismatched_rows(self):
        with pytest.raises(PairMismatchError):
            interpolate(realize_upper([1, 2]), realize_upper([2, 1]), 3)


class TestLeak:
    def setup_method(self):
        self.w = WeightSystem(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})

    def test_zero_drain_is_identity(self):
        assert leak(self.w, {(1, 2): 0}, 3) == self.w

    def test_full_drain_of_one_pair(self):
        out = leak(self.w, {(1, 2): 1}, 3)
        assert out == WeightSystem(3, {(1, 3): 1, (2, 3): 1, (1,): 1, (2,): 1})
        assert union(out) == 4  # sigma/(k-1) + x/(k-2) = 3 + 1
        assert rows(out) == (2, 2, 2)

    def test_half_drain(self):
        out = leak(self.w, {(1, 2): Fraction(1, 2)}, 3)
        assert union(out) == Fraction(7, 2)
        assert rows(out) == (2, 2, 2)

    def test_overdraw(self):
        with pytest.raises(OverdrawError):
            leak(self.w, {(1, 2): 2}, 3)

    def test_k2_unsupported(self):
        with pytest.raises(InvalidInputError):
            leak(WeightSystem(2, {(1,): 1}), {(1,): 1}, 2)

    def test_wrong_cardinality(self):
        with pytest.raises(InvalidInputError):
            leak(self.w, {(1,): 1}, 3)


class TestRealizeAddendum:
    def test_no_drain_at_lower_end(self):
        w = realize_addendum([2, 2, 2], 3, 3)
        assert w.support_cardinalities() == {2}
        assert union(w) == 3

    def test_single_unit_drain(self):
        w = realize_addendum([2, 2, 2], 3, 4)
        assert w == WeightSystem(3, {(1, 3): 1, (2, 3): 1, (1,): 1, (2,): 1})

    def test_full_drain_is_disjoint(self):
        w = realize_addendum([2, 2, 2], 3, 6)
        assert w == WeightSystem(3, {(1,): 2, (2,): 2, (3,): 2})

    def test_window_validation(self):
        with pytest.raises(AddendumPreconditionError):
            realize_addendum([2, 2, 2], 3, Fraction(13, 2))
        with pytest.raises(AddendumPreconditionError):
            realize_addendum([2, 2, 2], 3, Fraction(5, 2))
        with pytest.raises(AddendumPreconditionError):
            realize_addendum([1, 1, 5], 3, 5)  # a_bar < max size

    def test_sweep_support(self):
        sigma = Fraction(6)
        for j in range(8):
            a = sigma / 2 + (sigma / 1 - sigma / 2) * Fraction(j, 7)
            w = realize_addendum([2, 2, 2], 3, a)
            assert union(w) == a
            assert rows(w) == (2, 2, 2)
            assert w.support_cardinalities() <= {2, 1}


class TestRealizeMeasure:
    def test_upper_is_disjoint(self):
        inst = Instance([1, 2, 3], 3, "measure")
        assert realize_measure(inst, 6) == realize_upper([1, 2, 3])

    def test_unit_triple_at_threshold(self):
        inst = Instance([1, 1, 1], 3, "measure")
        w = realize_measure(inst, Fraction(3, 2))
        assert w == solve_extreme([1, 1, 1])

    def test_dominant_size_at_lower(self):
        inst = Instance([1, 1, 5], 3, "measure")
        w = realize_measure(inst, 5)
        assert verify(w, inst, 5).verdict

    def test_infeasible_carries_report(self):
        inst = Instance([1, 1, 1], 3, "measure")
        with pytest.raises(InfeasibleError) as excinfo:
            realize_measure(inst, 1)
        assert excinfo.value.report.lower == Fraction(3, 2)

    def test_mode_mismatch(self):
        with pytest.raises(InvalidInputError):
            realize_measure(Instance([1, 1], 2, "counting"), 2)


def canonical_form(w, sizes):
    """Relabel witness indices into the stable-sorted order of ``sizes``."""
    order = sorted(range(len(sizes)), key=sizes.__getitem__)
    rank = {orig + 1: pos + 1 for pos, orig in enumerate(order)}
    return WeightSystem(w.n, {tuple(rank[i] for i in key): v for key, v in w.weights.items()})


@given(sized_k(rational_sizes))
def test_lower_contract(data):
    sizes, k = data
    w = realize_lower(sizes, k)
    d = derived_sizes(w)
    sigma = sum(sizes, Fraction(0))
    assert d.per_set == tuple(sizes)
    assert d.union == max(max(sizes), sigma / (k - 1))
    assert w.is_admissible(k)
    assert all(value > 0 for value in w.weights.values())


@given(sized_k(rational_sizes))
def test_lower_support_concentration(data):
    sizes, k = data
    sigma = sum(sizes, Fraction(0))
    if sigma / (k - 1) >= max(sizes):
        w = realize_lower(sizes, k)
        assert w.support_cardinalities() <= {k - 1}


@given(sized_k(rational_sizes), st.randoms(use_true_random=False))
def test_lower_permutation_equivariance(data, rng):
    sizes, k = data
    shuffled = list(sizes)
    rng.shuffle(shuffled)
    direct = canonical_form(realize_lower(sizes, k), sizes)
    permuted = canonical_form(realize_lower(shuffled, k), shuffled)
    assert direct == permuted


@given(sized_k(rational_sizes), st.integers(0, 6))
def test_realize_measure_contract(data, numerator):
    sizes, k = data
    inst = Instance(sizes, k, "measure")
    from unionwitness import bounds

    report = bounds(inst)
    a = report.lower + (report.upper - report.lower) * Fraction(numerator, 6)
    w = realize_measure(inst, a)
    assert verify(w, inst, a).verdict
