"""Exception hierarchy for vecshap."""


class VecShapError(ValueError):
    """Base class for every error raised by the engine."""


class GameValueError(VecShapError):
    """A game or attribution violates its construction invariants."""


class ShapeMismatchError(VecShapError):
    """Operands disagree on player count, output dimension or matrix shape."""


class CapExceededError(VecShapError):
    """A player/output count is above the exact-enumeration cap."""


class SingularBlockError(VecShapError):
    """A covariance block failed the positive-definite pivot check."""


class InputFormatError(VecShapError):
    """A JSON/CSV input file could not be parsed into the expected schema."""


class UndefinedMetricError(VecShapError):
    """A similarity metric is undefined for the given vectors."""
