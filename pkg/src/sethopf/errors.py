"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument breaks a structural precondition (wrong ground set, overlap, ...)."""


class OrderError(DomainError):
    """A coarsening-order precondition (G <= F) does not hold."""


class SizeLimitError(ValueError):
    """An enumeration bound was exceeded; raise the bound explicitly to proceed."""
