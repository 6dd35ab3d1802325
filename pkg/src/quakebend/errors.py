"""Exception hierarchy shared across the library.

The CLI maps these onto exit codes: parse errors -> 2, domain errors
(out-of-range parameters, wrong isometry class, degenerate input) -> 3,
verification failures -> 4.
"""


class QuakebendError(Exception):
    """Base class for all library errors."""


class MalformedMatrixError(QuakebendError):
    """Matrix is singular or cannot be normalized to unit determinant."""


class WrongClassError(QuakebendError):
    """Operation applied to an isometry of the wrong class."""


class DomainError(QuakebendError):
    """Parameter outside the mathematical domain of the operation."""


class StructureError(QuakebendError):
    """Inconsistent surface / lamination / decomposition data."""


class ParseError(QuakebendError):
    """Scenario file could not be parsed."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class VerificationError(QuakebendError):
    """A cross-oracle verification suite failed."""
