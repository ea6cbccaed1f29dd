"""Exception hierarchy.

Every error raised by the library derives from :class:`QcfunError`, so callers
can catch one type.  Domain violations are also ``ValueError`` subclasses and
computational failures are ``ArithmeticError`` subclasses, keeping the usual
Python semantics intact.
"""

__all__ = [
    "QcfunError",
    "DomainError",
    "UnsupportedDimensionError",
    "DegenerateGeometryError",
    "ComputationError",
    "ConvergenceError",
    "DivergenceError",
    "OverflowSignal",
    "PolylineFormatError",
]


class QcfunError(Exception):
    """Base class for all library errors."""


class DomainError(QcfunError, ValueError):
    """Argument outside the documented domain of an operation."""


class UnsupportedDimensionError(DomainError):
    """A quantity was requested in a dimension where no formula exists (n >= 3)."""


class DegenerateGeometryError(DomainError):
    """Geometric input degenerate for the requested estimator (zero chord, coincident points, ...)."""


class PolylineFormatError(QcfunError, ValueError):
    """Malformed polyline CSV.  Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ComputationError(QcfunError, ArithmeticError):
    """Base class for runtime numerical failures."""


class ConvergenceError(ComputationError):
    """An iteration failed to converge within its cap (usually NaN-poisoned input)."""


class DivergenceError(ComputationError):
    """The requested value diverges at the given argument (e.g. complete elliptic integral at 1)."""


class OverflowSignal(ComputationError):
    """The result exceeds double-precision range."""
