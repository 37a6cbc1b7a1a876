"""Exception types shared across the package."""


class QuiverConeError(Exception):
    """Base class for every error raised by this package."""


class QuiverFileError(QuiverConeError):
    """Malformed quiver, weight or literal input; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(QuiverConeError):
    """Invalid domain object or argument (containment, dominance, support, sizes)."""


class CapExceededError(QuiverConeError):
    """An enumeration or LP size cap was hit; we refuse to truncate silently."""
