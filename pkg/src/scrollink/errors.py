"""Exception types shared by all modules."""


class DomainError(ValueError):
    """A violated precondition. ``precondition`` names the broken rule."""

    def __init__(self, precondition, message):
        super().__init__(f"{precondition}: {message}")
        self.precondition = precondition


class ConsistencyError(RuntimeError):
    """An internal identity failed (for example a profile whose mass is not d)."""
