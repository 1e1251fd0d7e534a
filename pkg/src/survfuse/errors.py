"""Exception types shared across the package."""


class SurvfuseError(Exception):
    """Base class for all survfuse errors."""


class ShapeError(SurvfuseError, ValueError):
    """Operands with incompatible shapes were passed to a tensor op."""


class NumericsError(SurvfuseError, ArithmeticError):
    """A computation produced or received non-finite values."""


class DataError(SurvfuseError, ValueError):
    """Input data (cohort files, records, metric inputs) failed validation."""


class ConfigError(SurvfuseError, ValueError):
    """Invalid configuration: bad flag values, conflicting options, bad keys."""
