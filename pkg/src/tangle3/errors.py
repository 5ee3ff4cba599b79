"""Exception types shared across the package."""


class TangleError(Exception):
    """Base class for all package errors."""


class ParseError(TangleError, ValueError):
    """A braid word string does not follow the token grammar."""


class MalformedCurveError(TangleError, ValueError):
    """Weight data does not describe a multicurve (balance, planarity,
    negative entries, or a derived quantity out of range)."""


class ContractViolation(TangleError):
    """A caller broke a documented precondition."""


class InternalError(TangleError):
    """The reduction machinery reached a state it cannot classify.

    Carries the full state in ``args`` so the case can be reported.
    """
