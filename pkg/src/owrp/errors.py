"""Exception hierarchy shared by every module."""


class OWRPError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(OWRPError, ValueError):
    """Raw vertex input does not describe a usable orthogonal polygon.

    ``index`` is the offending input vertex when one can be named.
    """

    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"{message} (vertex {index})"
        super().__init__(message)
        self.index = index


class NotClosedOrTooSmall(ValidationError):
    pass


class NotOrthogonal(ValidationError):
    pass


class NotSimple(ValidationError):
    pass


class ZeroLengthEdge(ValidationError):
    pass


class NonIntegerCoordinate(ValidationError):
    pass


class MalformedJson(ValidationError):
    pass


class UnsupportedClass(OWRPError):
    """The decomposition dual graph is not a path."""


class PointOutside(OWRPError, ValueError):
    pass


class RouteOutside(OWRPError, ValueError):
    pass


class TooLarge(OWRPError, ValueError):
    pass


class BudgetExceeded(OWRPError):
    pass


class GenerationFailed(OWRPError):
    pass
