"""Exception types shared across the package."""

__all__ = [
    "NotBentError",
    "DualAccessError",
    "ResourceLimitError",
    "SearchExhaustedError",
    "TruthTableParseError",
    "InconsistentShiftError",
]


class NotBentError(ValueError):
    """An operation required a flat spectrum and the input does not have one.

    ``frequency`` is the first offending frequency index, or None when the
    failure is structural (odd number of variables).
    """

    def __init__(self, message: str, frequency: int | None = None) -> None:
        super().__init__(message)
        self.frequency = frequency


class DualAccessError(RuntimeError):
    """The dual channel was queried on an oracle that does not expose it."""


class ResourceLimitError(RuntimeError):
    """An operation exceeded its configured size cap."""


class SearchExhaustedError(RuntimeError):
    """An exhaustive search that is expected to succeed found nothing."""


class TruthTableParseError(ValueError):
    """A truth-table file could not be parsed; carries line and offset."""

    def __init__(self, message: str, line: int, offset: int | None = None) -> None:
        loc = f"line {line}" if offset is None else f"line {line}, offset {offset}"
        super().__init__(f"{message} ({loc})")
        self.line = line
        self.offset = offset


class InconsistentShiftError(ValueError):
    """Two tables that were promised to be shifts of each other are not."""
