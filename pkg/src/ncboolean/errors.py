"""Exception types raised across the package."""


class NCBooleanError(Exception):
    """Base class for all package errors."""


class InputError(NCBooleanError, ValueError):
    """Malformed or out-of-range input."""


class StructureError(NCBooleanError, ValueError):
    """A combinatorial object violates a required structural property."""


class PreconditionError(NCBooleanError, ValueError):
    """An operation was called outside the situation it is defined for."""


class DomainError(NCBooleanError, ValueError):
    """A function was evaluated outside its domain."""


class SolverError(NCBooleanError, RuntimeError):
    """A fixed-point iteration did not stabilise."""
