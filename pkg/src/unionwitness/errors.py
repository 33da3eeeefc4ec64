"""Exception types raised by the solver.

Everything derives from :class:`UnionWitnessError` so callers can catch the
whole family at once.  ``InvalidInputError`` and ``MalformedWitnessError``
additionally derive from ``ValueError`` because they signal bad values.
"""

from __future__ import annotations


class UnionWitnessError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(UnionWitnessError, ValueError):
    """An argument violates a documented precondition (bad k, negative size,
    non-integer value in counting mode, and so on)."""


class MalformedWitnessError(UnionWitnessError, ValueError):
    """A weight system is structurally unusable, e.g. carries a negative weight."""


class InfeasibleError(UnionWitnessError):
    """The requested union size lies outside the feasible interval.

    Carries the :class:`~unionwitness.bounds.FeasibilityReport` explaining
    which bound was violated.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ExtremeCaseError(UnionWitnessError):
    """The closed-form extreme construction does not apply (some size exceeds
    the balanced average); the caller must dispatch to another case."""


class InterpolationRangeError(UnionWitnessError):
    """Target union size lies outside the two endpoint unions."""


class PairMismatchError(UnionWitnessError):
    """Two weight systems passed as a blending pair have different row sums."""


class OverdrawError(UnionWitnessError):
    """A leak request exceeds the weight available on the drained region."""


class CannotIncrementError(UnionWitnessError):
    """All regions are singletons, so the union size is already maximal."""


class AddendumPreconditionError(UnionWitnessError):
    """The two-layer sweep construction was asked for a target outside its
    valid window."""


class GuardrailExceededError(UnionWitnessError):
    """An exhaustive-enumeration request is too large for the oracle."""
