"""Exception hierarchy shared by every module of the package."""


class GraphIdealError(Exception):
    """Base class for all errors raised by graph_ideal."""


class ParseError(GraphIdealError):
    """Malformed graph or polynomial text."""


class ValidationError(GraphIdealError):
    """Well-formed input that violates the simple-graph assumptions."""


class ResourceLimit(GraphIdealError):
    """A configured cap (cycles, pairs, edges) was exceeded."""


class PreconditionError(GraphIdealError, ValueError):
    """Inputs outside the domain where an operation is defined."""


class InconsistencyError(GraphIdealError):
    """Two independent computations disagree; indicates an engine bug."""


class DivisionByZero(GraphIdealError, ZeroDivisionError):
    pass
