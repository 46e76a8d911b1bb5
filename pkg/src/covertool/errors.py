"""Exception types shared across the package."""


class SizeError(RuntimeError):
    """An exact computation would exceed a hard enumeration cap."""

    def __init__(self, message: str, size: int | None = None):
        super().__init__(message)
        self.size = size
