"""Exact feasibility and witness construction for unions of set systems
whose k-wise intersections are all empty.

Given sizes a_1..a_n and a bound k, the achievable union sizes form exactly
the interval [max(max a_i, sigma/(k-1)), sigma] (rounded up at the bottom in
counting mode).  This package decides feasibility, constructs explicit
witnesses for any feasible target, verifies witnesses independently, and
cross-checks everything against an exhaustive oracle on small instances.
"""

from .bounds import FeasibilityReport, bounds, ceil_fraction, feasible
from .counting import increment, realize_counting, realize_lower_counting
from .errors import (
    AddendumPreconditionError,
    CannotIncrementError,
    ExtremeCaseError,
    GuardrailExceededError,
    InfeasibleError,
    InterpolationRangeError,
    InvalidInputError,
    MalformedWitnessError,
    OverdrawError,
    PairMismatchError,
    UnionWitnessError,
)
from .measure import (
    interpolate,
    leak,
    realize_addendum,
    realize_lower,
    realize_measure,
    realize_upper,
    solve_extreme,
)
from .model import (
    DerivedSizes,
    Instance,
    Mode,
    SubsetKey,
    WeightSystem,
    derived_sizes,
    normalize,
)
from .oracle import (
    CounterexampleReport,
    achievable_unions,
    achievable_unions_restricted,
    addendum_counterexample,
    witness_counts,
)
from .verify import MaterializedWitness, VerifyReport, decompose, materialize, verify

__version__ = "0.1.0"

__all__ = [
    "AddendumPreconditionError",
    "CannotIncrementError",
    "CounterexampleReport",
    "DerivedSizes",
    "ExtremeCaseError",
    "FeasibilityReport",
    "GuardrailExceededError",
    "InfeasibleError",
    "Instance",
    "InterpolationRangeError",
    "InvalidInputError",
    "MalformedWitnessError",
    "MaterializedWitness",
    "Mode",
    "OverdrawError",
    "PairMismatchError",
    "SubsetKey",
    "UnionWitnessError",
    "VerifyReport",
    "WeightSystem",
    "achievable_unions",
    "achievable_unions_restricted",
    "addendum_counterexample",
    "bounds",
    "ceil_fraction",
    "decompose",
    "derived_sizes",
    "feasible",
    "increment",
    "interpolate",
    "leak",
    "materialize",
    "normalize",
    "realize_addendum",
    "realize_counting",
    "realize_lower",
    "realize_lower_counting",
    "realize_measure",
    "realize_upper",
    "solve_extreme",
    "verify",
    "witness_counts",
]
