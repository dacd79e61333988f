"""Shared exception types."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of the operation."""


class ValidationError(DomainError):
    """Structured data (sequence, semigroup, tree) violates its invariants."""


class TruncationError(DomainError):
    """Series truncation is too small to decide the requested quantity."""


class InputError(ValueError):
    """Malformed textual or JSON input; carries a position when available."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
