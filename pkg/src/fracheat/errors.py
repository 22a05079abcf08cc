"""Exception hierarchy shared by all fracheat modules."""


class FracheatError(Exception):
    """Base class for all library errors."""


class DomainError(FracheatError, ValueError):
    """An argument is outside the mathematically supported domain."""


class ConvergenceError(FracheatError, RuntimeError):
    """An iterative computation failed to converge within its budget."""


class NumericalError(FracheatError, RuntimeError):
    """An internal numerical invariant was violated (e.g. a nonpositive pivot)."""
