"""Shared exception types."""


class GainArrError(Exception):
    """Base class for all library errors."""


class DomainError(GainArrError):
    """Scalar domain misuse: bad payload, division by zero, mixed domains."""


class GraphError(GainArrError):
    """Malformed gain graph input or operation."""


class ArrangementError(GainArrError):
    """Malformed arrangement operation."""


class BoundExceeded(GainArrError):
    """A configured resource bound was hit before the computation finished."""


class SearchBudgetExceeded(BoundExceeded):
    """A freeness search exceeded its node cap."""


class VerificationError(GainArrError):
    """An internal cross-check that should hold identically failed."""


class ParseError(GainArrError):
    """Malformed gain graph text input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
