"""Exception hierarchy shared by all maxplus modules."""

from __future__ import annotations


class MaxplusError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(MaxplusError):
    """Operands have incompatible shapes."""


class DomainError(MaxplusError):
    """A value is outside the domain an operation accepts."""


class SpecError(MaxplusError):
    """A system description (event-graph spec, JSON input) is malformed."""


class ResourceExceeded(MaxplusError):
    """A configured work ceiling was hit before the computation finished."""


class NotConverged(MaxplusError):
    """Fixed-point iteration hit its cap while the chain was still moving.

    Carries the iteration count reached and the last chain element so the
    caller can retry with a larger cap.
    """

    def __init__(self, iterations, last):
        super().__init__(f"no fixed point after {iterations} iterations")
        self.iterations = iterations
        self.last = last


class NotSolvable(MaxplusError):
    """The one-sided linear system admits no exact solution."""


class NotReconstructible(MaxplusError):
    """The requested functional is not determined by the observed one."""


class ConstraintViolation(MaxplusError):
    """An internally constructed witness failed its defining equation."""
