from .base import WeightedHodgeException

__all__ = ["VerificationError", "UnknownSuite"]


class VerificationError(WeightedHodgeException):
    def __init__(self, failures):
        self.failures = failures
        super().__init__(
            f"{failures} verification check(s) failed. See the report for "
            "replayable seeds."
        )


class UnknownSuite(WeightedHodgeException):
    def __init__(self, name, known):
        super().__init__(
            f"Unknown suite `{name}`. Available suites: " + ", ".join(known)
        )
