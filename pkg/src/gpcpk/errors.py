"""Exception taxonomy shared by all gpcpk modules."""


class GpcError(Exception):
    """Base class for every error raised by gpcpk."""


class DomainError(GpcError, ValueError):
    """An argument lies outside a function's mathematical domain."""


class ConvergenceError(GpcError, RuntimeError):
    """A series or quadrature failed to reach the requested accuracy."""


class SingularPointError(GpcError, ZeroDivisionError):
    """Evaluation requested at a singular point (e.g. half-life at a peak)."""


class BracketError(GpcError, RuntimeError):
    """Root bracketing failed (no sign change in the search window)."""


class LossError(GpcError, ValueError):
    """The regression loss is undefined (model prediction vanished at a sample)."""


class FitError(GpcError, RuntimeError):
    """Curve fitting could not produce a usable result."""


class InsufficientDataError(GpcError, ValueError):
    """Too few samples for the requested statistic."""
