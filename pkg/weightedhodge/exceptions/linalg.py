from .base import WeightedHodgeException

__all__ = [
    "LinalgError",
    "DimensionOutOfRange",
    "NotSymmetrizable",
    "NotSymmetric",
    "ConvergenceError",
    "IndexOutOfRange",
    "SumSetTooLarge",
]


class LinalgError(WeightedHodgeException):
    pass


class DimensionOutOfRange(LinalgError):
    def __init__(self, k, low, high, what="k"):
        super().__init__(
            f"Dimension {what}={k} is out of range; expected "
            f"{low} <= {what} <= {high}."
        )


class NotSymmetrizable(LinalgError):
    def __init__(self, name="matrix"):
        super().__init__(
            f"The {name} does not satisfy W M = M^T W for its basis "
            "weights."
        )


class NotSymmetric(LinalgError):
    def __init__(self, asymmetry):
        super().__init__(
            f"Matrix is not symmetric (max relative asymmetry "
            f"{asymmetry:.3e})."
        )


class ConvergenceError(LinalgError):
    def __init__(self, sweeps, offdiag):
        super().__init__(
            f"Jacobi iteration did not converge in {sweeps} sweeps "
            f"(off-diagonal mass {offdiag:.3e})."
        )


class IndexOutOfRange(LinalgError):
    def __init__(self, index, low, high):
        super().__init__(
            f"Index {index} is out of range; expected {low}..{high}."
        )


class SumSetTooLarge(LinalgError):
    def __init__(self, size, limit):
        super().__init__(
            f"The subset-sum enumeration needs {size} sums, above the "
            f"configured limit of {limit} (`sumset.max_size`)."
        )
