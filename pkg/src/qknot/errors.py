"""Exception types shared across the package.

Plain division by zero raises the builtin ZeroDivisionError; everything
else that a caller may want to catch selectively gets its own class here.
"""


class NotDivisibleError(ArithmeticError):
    """Exact division failed: the quotient does not lie in Z[q, q^-1].

    For coefficient families whose integrality is conjectural this is a
    reportable outcome, not a bug; callers decide.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ZeroPointError(ZeroDivisionError):
    """Evaluation at z = 0 with a negative exponent present."""


class OutOfTableError(LookupError):
    """A table-backed knot has no data at the requested (rank, depth)."""


class BadNormalizationError(ValueError):
    """Invariant sequence fed to the solver does not start with J_0 = 1."""


class DegenerateScheduleError(ValueError):
    """Root schedule hit N + a = 0, so the evaluation point is undefined."""


class CoprimalityViolationError(ValueError):
    """Direct product-formula evaluation needs gcd(s, N + a) = 1."""


class ZeroInvariantError(ArithmeticError):
    """Logarithm requested of an invariant value that is exactly zero."""


class UnknownReferenceError(LookupError):
    """No reference volume is bundled for the requested knot."""
