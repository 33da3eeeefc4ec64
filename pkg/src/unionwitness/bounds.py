"""Feasibility interval for the union size.

With row sums a_1..a_n prescribed and every k-wise intersection empty, the
union size u of any admissible system satisfies

    max(a_1, ..., a_n, sigma/(k-1))  <=  u  <=  sigma,        sigma = sum a_i.

The upper bound is the disjoint arrangement.  The lower bound combines the
trivial u >= max a_i with a Bonferroni-type inequality: summing the row-sum
identities over i counts each region key S exactly |S| <= k-1 times, so
sigma <= (k-1) * u.  Both bounds are attained, and so is everything between
them; in counting mode the lower threshold rounds up to the next integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .model import ExactNumber, Instance, Mode, as_fraction


@dataclass(frozen=True)
class FeasibilityReport:
    """Exact feasibility data for one instance.

    ``lower``/``upper`` bound the achievable union sizes.  ``a_bar`` is the
    Bonferroni threshold sigma/(k-1) before integer rounding.
    ``critical_index`` is the unique m with sigma/(m-1) >= max a_i > sigma/m
    (so the threshold dominates max a_i exactly for k <= m), with sentinel
    m = n+1 when max a_i <= sigma/n and m = 2 for the all-zero instance.
    """

    lower: Fraction
    upper: Fraction
    sigma: Fraction
    a_bar: Fraction
    critical_index: int


def ceil_fraction(x: Fraction) -> int:
    """Exact ceiling of a rational, via integer division (no float round trip)."""
    return -((-x.numerator) // x.denominator)


def bounds(inst: Instance) -> FeasibilityReport:
    """Compute the exact feasibility interval of an instance."""
    sigma = sum(inst.sizes, Fraction(0))
    a_max = max(inst.sizes)
    a_bar = sigma / (inst.k - 1)
    if inst.mode is Mode.COUNTING:
        threshold = Fraction(ceil_fraction(a_bar))
    else:
        threshold = a_bar
    lower = max(a_max, threshold)
    if sigma == 0:
        critical = 2
    else:
        # unique m with sigma/(m-1) >= a_max > sigma/m; equals floor(sigma/a_max)+1
        critical = int(sigma // a_max) + 1
    return FeasibilityReport(
        lower=lower, upper=sigma, sigma=sigma, a_bar=a_bar, critical_index=critical
    )


def feasible(inst: Instance, a: ExactNumber) -> bool:
    """Decide whether union size ``a`` is achievable for the instance.

    Raises InvalidInputError for a non-integer target in counting mode.
    """
    value = as_fraction(a, "target union size")
    if inst.mode is Mode.COUNTING and value.denominator != 1:
        raise InvalidInputError(f"counting mode requires an integer union size, got {value}")
    report = bounds(inst)
    return report.lower <= value <= report.upper
