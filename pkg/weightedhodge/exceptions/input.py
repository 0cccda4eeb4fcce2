from .base import WeightedHodgeException

__all__ = [
    "InputError",
    "MalformedComplexFile",
    "NonPositiveWeight",
    "NotASubcomplex",
    "ConfigError",
]


class InputError(WeightedHodgeException):
    pass


class MalformedComplexFile(InputError):
    def __init__(self, source, reason):
        super().__init__(f"Cannot read complex from {source}: {reason}")


class NonPositiveWeight(InputError):
    def __init__(self, label, value):
        super().__init__(
            f"Weight of vertex `{label}` must be positive, got {value}."
        )


class NotASubcomplex(InputError):
    def __init__(self, reason):
        super().__init__(f"Not a subcomplex: {reason}")


class ConfigError(InputError):
    pass
