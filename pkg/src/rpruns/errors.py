"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds a hard size limit (e.g. enumeration width)."""
