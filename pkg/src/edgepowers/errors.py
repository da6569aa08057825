"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument violates a precondition (bad graph, bad caps, malformed file)."""


class BudgetExceeded(RuntimeError):
    """A sumset or wall-clock budget was hit; the instance is beyond desk scale."""


class HilbertSeriesError(ArithmeticError):
    """The Hilbert function did not behave like that of a Cohen-Macaulay domain."""


class RouteDisagreement(RuntimeError):
    """The classification route and the oracle route returned different verdicts."""
