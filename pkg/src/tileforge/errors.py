"""Exception hierarchy shared by every layer."""


class TileError(ValueError):
    """Base class for all library errors."""


class EmptyWord(TileError):
    pass


class InvalidLetter(TileError):
    pass


class NotClosed(TileError):
    pass


class SelfIntersecting(TileError):
    pass


class DegenerateArea(TileError):
    pass


class FactorizationMismatch(TileError):
    pass


class TooManyFactorizations(TileError):
    """More than two square factorizations: would contradict the two-tiling bound."""


class StructureViolation(TileError):
    pass


class ClassificationFailure(TileError):
    pass


class BadExponentPattern(TileError):
    pass


class NotADoubleSquare(TileError):
    pass


class BoundTooSmall(TileError):
    pass


class FormatError(TileError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
