from ..exceptions import BadInputException
from ...schemas.algebra import ModulesErrorCode


# Ошибки входных данных
class InvalidModuleException(BadInputException):
    """Матрицы действия не задают kG-модуль (2)."""

    error_code = ModulesErrorCode.INVALID_MODULE


class InvalidPairingException(BadInputException):
    """Спаривание не эквивариантно или имеет неверную форму (2)."""

    error_code = ModulesErrorCode.INVALID_PAIRING


class GroupMismatchException(BadInputException):
    """Модули заданы над разными группами или полями (2)."""

    error_code = ModulesErrorCode.GROUP_MISMATCH
