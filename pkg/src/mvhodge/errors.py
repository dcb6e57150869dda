"""Exception types shared across the engines."""


class TruncationError(ValueError):
    """A coefficient beyond the tracked validity order was requested."""


class NotAUnitError(ArithmeticError):
    """Series inversion met a leading coefficient that is not a unit."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class IdentityViolation(ArithmeticError):
    """An exact identity that must hold failed to hold."""


class InfeasibleError(ValueError):
    """A brute-force computation was asked for beyond its size guard."""
