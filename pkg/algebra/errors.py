class AlgebraError(Exception):
    """Base class for every error raised by the monomial ideal toolkit"""


class DimensionError(AlgebraError, ValueError):
    """Exponent vectors or ideals live in different numbers of variables"""


class ExactDivisionError(AlgebraError, ArithmeticError):
    """A monomial was divided by something that does not divide it"""


class DomainError(AlgebraError, ValueError):
    """An operation was called outside the inputs it is defined for"""


class VariableIndexError(AlgebraError, IndexError):
    """A variable index outside 1..r"""
