"""Exception types raised by the simulator."""


class CavityFWMError(Exception):
    """Base class for all simulator errors."""


class InvalidParameterError(CavityFWMError, ValueError):
    """A physical parameter or argument is outside its valid domain."""


class SingularityError(CavityFWMError, ArithmeticError):
    """The characteristic denominator vanished (evaluation at an undamped pole)."""


class NumericalFailureError(CavityFWMError, RuntimeError):
    """An iterative numerical method failed to converge.

    The ``history`` attribute carries the residuals or the sequence of
    successive estimates so callers can inspect what went wrong.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = history


class BracketingError(CavityFWMError, ValueError):
    """A search interval does not straddle the feature being located."""


class CorrelationUndefinedError(CavityFWMError, ZeroDivisionError):
    """Normalized correlations requested for a field with zero photon flux."""
