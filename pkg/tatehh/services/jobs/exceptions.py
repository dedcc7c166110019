from ..exceptions import BadInputException, InternalComputationException, VerificationFailedException
from ...schemas.algebra import JobsErrorCode


# Ошибки входных данных
class InvalidJobException(BadInputException):
    """Задание не соответствует схеме (2)."""

    error_code = JobsErrorCode.INVALID_JOB


class UnreadableFileException(BadInputException):
    """Файл задания не читается (2)."""

    error_code = JobsErrorCode.UNREADABLE_FILE


# Ошибки проверок
class JobVerificationFailedException(VerificationFailedException):
    """Отчёт содержит невыполненные проверки (1)."""

    error_code = JobsErrorCode.VERIFICATION_FAILED


# Внутренние ошибки
class ReportRenderFailedException(InternalComputationException):
    """Шаблон отчёта не найден или не отрисовывается (4)."""

    error_code = JobsErrorCode.JOB_SERVICE_ERROR
