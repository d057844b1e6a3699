"""Exception types shared across the toolkit."""


class ConfigError(ValueError):
    """A configuration value is missing, inconsistent, or out of range."""


class InputError(ValueError):
    """An input (waveform, feature matrix, trial list) violates a precondition."""


class NumericGuardError(ArithmeticError):
    """A numeric guard tripped (zero-norm vector, non-finite value, degenerate mean)."""


class TrainingDiverged(RuntimeError):
    """Training produced a non-finite loss."""


class UnsupportedOperation(RuntimeError):
    """The requested operation does not apply to this model configuration."""


class MissingArtifact(FileNotFoundError):
    """A pipeline stage depends on an artifact that has not been produced yet."""
