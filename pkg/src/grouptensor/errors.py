"""Exception types shared across the package."""


class GroupTensorError(Exception):
    """Base class for all errors raised by this package."""


class SpecError(GroupTensorError, ValueError):
    """A group spec string or family/parameter combination is invalid."""


class LimitError(GroupTensorError, RuntimeError):
    """A configured size bound (order, coset count, tuple count) was exceeded."""


class ConsistencyError(GroupTensorError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
