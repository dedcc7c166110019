from ..exceptions import BadInputException, InternalComputationException
from ...schemas.algebra import DecompErrorCode


# Ошибки входных данных
class NotAbelianException(BadInputException):
    """Группа не абелева (2)."""

    error_code = DecompErrorCode.NOT_ABELIAN


class InvalidOrbitException(BadInputException):
    """Номер орбиты вне диапазона (2)."""

    error_code = DecompErrorCode.INVALID_ORBIT


class SpaceMismatchException(BadInputException):
    """Класс не принадлежит пространствам контекста разложения (2)."""

    error_code = DecompErrorCode.SPACE_MISMATCH


class InvalidDoubleCosetsException(BadInputException):
    """Набор не является системой представителей двойных смежных классов (2)."""

    error_code = DecompErrorCode.INVALID_DOUBLE_COSETS


class NotInDegreeZeroException(BadInputException):
    """Элемент центра определён только для классов степени 0 (2)."""

    error_code = DecompErrorCode.NOT_IN_DEGREE_ZERO


# Внутренние ошибки
class DecompositionInconsistentException(InternalComputationException):
    """Размерности разложения не согласованы (4)."""

    error_code = DecompErrorCode.DECOMPOSITION_INCONSISTENT
