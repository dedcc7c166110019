from ..exceptions import BadInputException, InternalComputationException
from ...schemas.algebra import RingErrorCode


# Ошибки входных данных
class UnknownGeneratorException(BadInputException):
    """Имя образующей не найдено в таблице (2)."""

    error_code = RingErrorCode.UNKNOWN_GENERATOR


class RelationSyntaxException(BadInputException):
    """Соотношение не разбирается (2)."""

    error_code = RingErrorCode.RELATION_SYNTAX


class WindowTooSmallException(BadInputException):
    """Мономы образующих не порождают все градуированные компоненты окна (2)."""

    error_code = RingErrorCode.WINDOW_TOO_SMALL


class NamingUnavailableException(BadInputException):
    """Именование образующих недоступно для группы и характеристики (2)."""

    error_code = RingErrorCode.NAMING_UNAVAILABLE


# Внутренние ошибки
class NormalizationFailedException(InternalComputationException):
    """Не удалось нормировать именованные классы (4)."""

    error_code = RingErrorCode.NORMALIZATION_FAILED
