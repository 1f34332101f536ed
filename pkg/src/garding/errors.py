"""Exception types shared across the toolkit.

The split mirrors how failures are reported downstream: usage/domain
problems (bad inputs, violated preconditions) versus numerical failures
(iteration did not converge, feasibility wall exceeded).
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DegenerateDegreeError(DomainError):
    """Leading coefficient vanishes where a genuine top degree is required."""


class PositivityError(DomainError):
    """A field or coefficient that must be strictly positive is not."""


class PreconditionError(DomainError):
    """A theorem-level hypothesis (sign condition, floor) is violated."""


class ResourceLimitError(RuntimeError):
    """The requested exact computation exceeds the documented feasibility wall."""


class ConvergenceError(RuntimeError):
    """An iterative solve failed; carries the last residual norm and log."""

    def __init__(self, message, residual_norm=None, log=None):
        super().__init__(message)
        self.residual_norm = residual_norm
        self.log = log if log is not None else []
