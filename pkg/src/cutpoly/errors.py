"""Shared exception types."""


class CostGuardError(RuntimeError):
    """Raised when a computation would exceed its documented size guard."""


class VerificationError(RuntimeError):
    """Raised when an internal cross-check fails (inconsistent counts, bad certificate)."""


class EdgeListParseError(ValueError):
    """Raised on malformed edge-list input; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
