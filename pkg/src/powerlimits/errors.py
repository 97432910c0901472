"""Exception types shared by the library and mapped to CLI exit codes."""


class PowerLimitsError(Exception):
    """Base class for all library errors."""


class ValidationError(PowerLimitsError, ValueError):
    """Bad input: invalid parameters, malformed torus file, composite M where a prime is needed."""


class ClassEquationError(ValidationError):
    """A torus table whose weights 1/|W_T| do not sum to 1."""


class CapExceededError(PowerLimitsError):
    """An enumeration would exceed a configured resource cap."""

    def __init__(self, message: str, predicted: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.predicted = predicted
        self.cap = cap
