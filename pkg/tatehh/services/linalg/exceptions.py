from ..exceptions import BadInputException, InternalComputationException
from ...schemas.algebra import LinalgErrorCode


# Ошибки входных данных
class InvalidPrimeException(BadInputException):
    """Характеристика не является простым числом (2)."""

    error_code = LinalgErrorCode.INVALID_PRIME


class InvalidMatrixException(BadInputException):
    """Некорректная матрица над F_p (2)."""

    error_code = LinalgErrorCode.INVALID_MATRIX


class ShapeMismatchException(BadInputException):
    """Несогласованные размеры матриц (2)."""

    error_code = LinalgErrorCode.SHAPE_MISMATCH


class SubspaceNotContainedException(BadInputException):
    """Подпространство B не содержится в span(Z) (2)."""

    error_code = LinalgErrorCode.SUBSPACE_NOT_CONTAINED


# Внутренние ошибки
class LinalgInvariantException(InternalComputationException):
    """Нарушен инвариант линейной алгебры (4)."""

    error_code = LinalgErrorCode.LINALG_INVARIANT_VIOLATED
