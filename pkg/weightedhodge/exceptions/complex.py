from .base import WeightedHodgeException

__all__ = [
    "ComplexError",
    "UnknownVertex",
    "DuplicateVertex",
    "FaceNotInComplex",
    "NotMaximalFace",
    "InvalidOverlap",
    "PositionOutOfRange",
    "VertexInFace",
    "EmptyGenerators",
    "LabelCollision",
    "VoidComplexError",
    "InvalidParameters",
]


class ComplexError(WeightedHodgeException):
    pass


class UnknownVertex(ComplexError):
    def __init__(self, label):
        super().__init__(f"Vertex `{label}` is not in the vertex list.")


class DuplicateVertex(ComplexError):
    def __init__(self, label):
        super().__init__(f"Vertex `{label}` appears more than once.")


class FaceNotInComplex(ComplexError):
    def __init__(self, face):
        super().__init__(f"The face {face} is not in the complex.")


class NotMaximalFace(ComplexError):
    def __init__(self, face):
        super().__init__(
            f"The face {face} has cofaces; only maximal faces can be "
            "deleted without breaking downward closure."
        )


class InvalidOverlap(ComplexError):
    def __init__(self, sigma, tau):
        super().__init__(
            f"Faces {sigma} and {tau} must have equal size and share all "
            "but one vertex."
        )


class PositionOutOfRange(ComplexError):
    def __init__(self, position, size):
        super().__init__(
            f"Position {position} is outside 1..{size} for a face of size "
            f"{size}."
        )


class VertexInFace(ComplexError):
    def __init__(self, vertex, face):
        super().__init__(f"Vertex {vertex} already belongs to {face}.")


class EmptyGenerators(ComplexError):
    def __init__(self, what, k):
        super().__init__(
            f"Cannot build the {what} complex at k={k}: there are no "
            "generating faces."
        )


class LabelCollision(ComplexError):
    def __init__(self, labels):
        labels = ", ".join(f"`{label}`" for label in sorted(map(str, labels)))
        super().__init__(
            f"The complexes share vertex labels ({labels}); join them with "
            "namespacing enabled."
        )


class VoidComplexError(ComplexError):
    def __init__(self, what="This operation"):
        super().__init__(f"{what} is undefined on the void complex.")


class InvalidParameters(ComplexError):
    pass
