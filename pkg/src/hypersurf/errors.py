"""Exception types raised across the package."""


class HypersurfError(Exception):
    """Base class for all package errors."""


class CellSyntaxError(HypersurfError, ValueError):
    pass


class WrongLength(CellSyntaxError):
    pass


class InvalidCharacter(CellSyntaxError):
    pass


class DimensionMismatch(HypersurfError, ValueError):
    pass


class InvalidDimension(HypersurfError, ValueError):
    pass


class NotAFace(HypersurfError, ValueError):
    pass


class NotACube(HypersurfError, ValueError):
    pass


class EmptyInput(HypersurfError, ValueError):
    pass


class VertexNotInComplex(HypersurfError, KeyError):
    pass


class NotASurface(HypersurfError, ValueError):
    """Some edge lies in three or more faces."""


class UnsupportedDimension(HypersurfError, ValueError):
    pass


class ZeroVector(HypersurfError, ArithmeticError):
    pass


class AtProjectionPole(HypersurfError, ArithmeticError):
    def __init__(self, message, face=None, grid_index=None):
        super().__init__(message)
        self.face = face
        self.grid_index = grid_index


class InvalidSubdivision(HypersurfError, ValueError):
    pass
