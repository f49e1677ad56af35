"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all library errors."""


class FieldMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class InvalidPartition(AlgebraError):
    pass


class EmptyWord(AlgebraError):
    pass


class NotLyndon(AlgebraError):
    pass


class NotLyndonWord(NotLyndon):
    pass


class SingleLetter(AlgebraError):
    pass


class InternalError(AlgebraError):
    pass


class SpecError(AlgebraError):
    """Invalid algebra parameters."""


class NonPrimeP(SpecError):
    pass


class CharMismatch(SpecError):
    pass


class PNotDividingN(SpecError):
    pass


class BadDVector(SpecError):
    pass


class IllegalGenerator(AlgebraError):
    pass


class NonTerminating(AlgebraError):
    pass


class SpecMismatch(AlgebraError):
    pass


class NotHopf(AlgebraError):
    pass


class InfinitePiece(AlgebraError):
    pass


class DegenerateWindow(AlgebraError):
    pass


class BoundTooLargeForMemory(AlgebraError):
    pass


class CharTooSmall(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


class CharPositive(AlgebraError):
    pass


class BadIndices(AlgebraError):
    pass


class ExprSyntaxError(AlgebraError):
    """Parse failure; carries the 1-based line and column of the offending token."""

    def __init__(self, message, position=0, source=""):
        self.position = position
        line = source.count("\n", 0, position) + 1
        col = position - (source.rfind("\n", 0, position) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"{message} at line {line}, column {col}")
