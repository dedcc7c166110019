from ..exceptions import AppException
from ..schemas import ErrorCode


# Исключения по коду выхода
class VerificationFailedException(AppException):
    """Проверка не пройдена (1)."""

    exit_code = 1
    error_code = ErrorCode.VERIFICATION_FAILED


class BadInputException(AppException):
    """Некорректные входные данные (2)."""

    exit_code = 2
    error_code = ErrorCode.VALIDATION_ERROR


class SizeBudgetExceededException(AppException):
    """Превышен бюджет размера вычислений (3)."""

    exit_code = 3
    error_code = ErrorCode.SIZE_BUDGET_EXCEEDED


# Исключения для внутренних ошибок
class InternalComputationException(AppException):
    """Внутреннее противоречие вычислений, признак ошибки реализации (4)."""

    exit_code = 4
    error_code = ErrorCode.INTERNAL_ERROR
