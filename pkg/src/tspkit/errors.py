"""Exception types shared across the toolkit."""


class TspkitError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(TspkitError, ValueError):
    """Two points with different dimensions were combined."""

    def __init__(self, dim_a: int, dim_b: int):
        super().__init__(f"dimension mismatch: {dim_a} vs {dim_b}")
        self.dim_a = dim_a
        self.dim_b = dim_b


class TourValidationError(TspkitError, ValueError):
    """A tour is not a valid permutation for its instance."""


class DomainError(TspkitError, ValueError):
    """An argument falls outside an operation's stated domain."""


class ConfigurationError(TspkitError, ValueError):
    """Invalid parameter or configuration value; names the offending field."""


class ParseError(TspkitError, ValueError):
    """Malformed instance or record text. Carries a 1-based line number."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{loc}: {message}")
        self.line = line
        self.column = column


class UnsupportedFormatError(TspkitError, ValueError):
    """The input is recognized but uses a feature this toolkit does not support."""


class FixtureLookupError(TspkitError, KeyError):
    """An unknown fixture name was requested; lists the available ones."""


class InstanceTooLargeError(TspkitError, ValueError):
    """Exhaustive search refused because the tour count is out of reach."""
