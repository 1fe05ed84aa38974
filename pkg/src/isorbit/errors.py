"""Exception types shared across the package.

Every error carries a stable ``code`` string so the CLI can emit
machine-readable error objects.
"""


class IsorbitError(Exception):
    """Base class for all library errors."""

    code = "Error"


class DimensionMismatchError(IsorbitError):
    code = "DimensionMismatch"


class NotAtomicError(IsorbitError):
    code = "NotAtomic"


class InvalidRotationError(IsorbitError):
    code = "InvalidRotation"


class DimensionTooLargeError(IsorbitError):
    code = "DimensionTooLarge"


class IterationCapExceededError(IsorbitError):
    code = "IterationCapExceeded"


class ClosureCapExceededError(IsorbitError):
    code = "ClosureCapExceeded"


class BoxTooLargeError(IsorbitError):
    code = "BoxTooLarge"


class NotStabilizedError(IsorbitError):
    """The padded-box reference never produced two agreeing partitions.

    Carries the partition at the largest padding tried, so callers can still
    run one-directional (soundness) checks against it.
    """

    code = "NotStabilized"

    def __init__(self, message, partition=None, padding=None):
        super().__init__(message)
        self.partition = partition
        self.padding = padding


class InvalidDomainError(IsorbitError):
    code = "InvalidDomain"


class StageCacheMismatchError(IsorbitError):
    code = "StageCacheMismatch"


class InputError(IsorbitError):
    """Malformed input document (bad JSON, missing or ill-typed fields)."""

    code = "ParseError"
