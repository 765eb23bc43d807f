"""Exception types shared across the package.

The CLI maps these onto exit codes: DomainError (and subclasses) -> 2,
SeriesFormatError -> 3, NumericError (and subclasses) -> 4.
"""


class DomainError(ValueError):
    """An argument lies outside an operation's stated domain."""


class UnknownSeriesError(DomainError):
    """Catalog lookup with a name that is not in the catalog."""


class SeriesFormatError(ValueError):
    """A custom-series document could not be parsed or is malformed."""


class NumericError(ArithmeticError):
    """A computation failed numerically (non-finite term, no convergence)."""


class AbelRadiusError(NumericError):
    """The inner power series of an Abel evaluation never reached its tail
    threshold at the requested radius."""
