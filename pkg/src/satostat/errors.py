"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: usage/domain problems exit 1,
data problems (parse failures, bound violations, missing coverage) exit 2,
resource limits exit 3.
"""


class SatostatError(Exception):
    """Base class for all package errors."""


class DomainError(SatostatError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class CoverageError(SatostatError):
    """A query reaches beyond the range covered by a table."""


class ParseError(SatostatError):
    """A file could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DataError(SatostatError):
    """Ingested or generated data violates a required invariant."""


class ResourceError(SatostatError):
    """A configured memory or size budget would be exceeded."""
