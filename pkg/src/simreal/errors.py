"""Exception hierarchy shared across the package."""


class SimRealError(Exception):
    """Base class for all simreal errors."""


class FormatError(SimRealError):
    """A file or manifest does not conform to the documented format."""


class SequenceError(SimRealError):
    """Frame files are present but their indices are not contiguous."""


class ShapeError(SimRealError):
    """Array shapes are inconsistent with each other or with a contract."""


class ResampleError(SimRealError):
    """Temporal resampling is impossible for the requested parameters."""


class InputError(SimRealError):
    """An operation received an input outside its domain."""


class SceneError(SimRealError):
    """A scene specification violates its invariants."""


class ConfigError(SimRealError):
    """A configuration value is invalid or inconsistent."""


class DataError(SimRealError):
    """Required data is missing or unusable."""


class TrainingDivergenceError(SimRealError):
    """Training produced a non-finite loss."""


class JudgeError(SimRealError):
    """The judge endpoint returned unusable responses after retries."""
