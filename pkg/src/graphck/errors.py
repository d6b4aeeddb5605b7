"""Exception types shared across the package."""


class GraphCKError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GraphCKError):
    """Malformed input data: bad matrix shape, duplicate names, bad JSON."""


class DomainError(GraphCKError):
    """An operation was invoked outside its mathematical domain."""


class NotFoundError(GraphCKError):
    """A named vertex or edge does not exist in the graph."""


class MoveError(GraphCKError):
    """A graph move was attempted with its preconditions unmet."""


class CannotRealizeError(GraphCKError):
    """A corner graph with an infinite head has no finite expansion."""


class InternalError(GraphCKError):
    """An internal consistency check failed; this indicates a bug."""
