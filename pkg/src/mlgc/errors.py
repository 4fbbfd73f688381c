"""Exception types shared across the package."""


class MlgcError(Exception):
    """Base class for all package-specific errors."""


class IsolatedVertexError(MlgcError, ValueError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has zero degree; normalized Laplacian undefined")


class NotSymmetricError(MlgcError, ValueError):
    pass


class KOutOfRangeError(MlgcError, ValueError):
    pass


class NoConvergenceError(MlgcError, RuntimeError):
    def __init__(self, iterations: int):
        self.iterations = iterations
        super().__init__(f"eigensolver failed to converge after {iterations} iterations")


class DimensionMismatchError(MlgcError, ValueError):
    pass


class EmptyLayerListError(MlgcError, ValueError):
    pass


class NonpositiveSigmaError(MlgcError, ValueError):
    pass


class AlphaLengthMismatchError(MlgcError, ValueError):
    pass


class TooFewPointsError(MlgcError, ValueError):
    pass


class LengthMismatchError(MlgcError, ValueError):
    pass


class DuplicatePointsError(MlgcError, ValueError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"points {i} and {j} coincide; reciprocal-distance weight undefined")


class InvalidDatasetError(MlgcError, ValueError):
    pass


class FileFormatError(MlgcError, ValueError):
    pass
