"""Shared exception types."""


class UsageError(ValueError):
    """Caller passed malformed, mismatched, or unsupported arguments."""


class ModelError(ValueError):
    """Inputs violate a precondition of the model being built."""


class OutOfRangeError(ModelError):
    """Parameters fall outside the admissible range."""


class NotFanoError(ModelError):
    """A construction fails its ampleness criterion.

    ``failing`` carries machine-readable data about the witness, e.g.
    ``{"pair": (2, 1)}`` for the ordered pair whose test failed.
    """

    def __init__(self, message, failing=None):
        super().__init__(message)
        self.failing = dict(failing or {})
