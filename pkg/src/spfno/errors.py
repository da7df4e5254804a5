"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Input data violates a precondition (length, finiteness, ...)."""


class ShapeError(ValueError):
    """Operands have incompatible shapes."""


class ConfigError(ValueError):
    """A configuration value is missing, unknown, or inconsistent."""


class CoefficientOverflowError(ValueError):
    """Nonzero spectral modes do not fit on the requested grid."""


class NumericFaultError(FloatingPointError):
    """A NaN or Inf appeared where finite values are required."""


class DegenerateSampleError(ValueError):
    """A reference sample has zero norm and no relative error exists."""


class UsageError(RuntimeError):
    """An operation was called in a way its contract forbids."""


class StabilityError(RuntimeError):
    """Time integration blew up; carries a suggested smaller step."""

    def __init__(self, message: str, suggested_dt: float | None = None):
        super().__init__(message)
        self.suggested_dt = suggested_dt


class GridError(ValueError):
    """Grids are not nested or otherwise incompatible."""


class CheckpointError(ValueError):
    """A checkpoint file is corrupt, mismatched, or unreadable."""


class DatasetError(ValueError):
    """A dataset container is corrupt, mismatched, or unreadable."""
