"""Exception hierarchy shared by all effitest modules.

The CLI maps these onto exit codes: input problems exit 1, configuration
problems exit 2, numeric failures exit 3.
"""


class EffitestError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(EffitestError):
    """Data fails a precondition: too short, wrong sign, degenerate."""


class InsufficientDataError(InvalidInputError):
    """Series is shorter than the operation requires."""


class ZeroVarianceError(InvalidInputError):
    """Operation is undefined on a constant (zero variance) series."""


class SchemaError(InvalidInputError):
    """CSV schema does not match the file (missing column, bad format)."""


class AlignmentError(InvalidInputError):
    """Two series cannot be calendar-aligned (no overlapping dates)."""


class ConfigurationError(EffitestError):
    """Invalid option value, unknown test identifier, or bad config file."""


class SingularDesignError(EffitestError):
    """Regression design matrix is rank deficient."""


class DomainError(EffitestError):
    """Numeric argument outside the mathematical domain of a function."""
