"""Exception hierarchy shared by every package under src/."""


class GameDecompError(Exception):
    """Base class for all errors raised by the toolkit."""


class InvalidProfileError(GameDecompError):
    """Strategy profile, player or profile index outside its range."""


class ShapeError(GameDecompError):
    """Matrix, vector or payoff table with the wrong shape."""


class GameFormatError(GameDecompError):
    """A game or weight document could not be parsed or validated."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class SpaceMismatchError(GameDecompError):
    """Operands live in different game spaces."""


class UnsupportedSpaceError(GameDecompError):
    """The construction is not defined on this game space."""


class NotPositiveDefiniteError(GameDecompError):
    """Weight matrix is not symmetric positive definite."""

    def __init__(self, message: str, pivot: int | None = None):
        self.pivot = pivot
        super().__init__(message)


class SchemeConstructionError(GameDecompError):
    """An internal invariant failed while building a decomposition scheme."""


class UnknownNameError(GameDecompError):
    """Unknown scheme, game class or inner product descriptor."""


class InvalidParameterError(GameDecompError):
    """A numeric option such as a trial count is out of range."""
