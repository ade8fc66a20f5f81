"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceLimitError(RuntimeError):
    """A search or enumeration exceeded its configured budget.

    ``lower`` and ``upper`` carry the best bound interval known when the
    budget ran out (either may be ``None`` when no bound was established).
    """

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
