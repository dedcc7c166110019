from ..exceptions import BadInputException, InternalComputationException, SizeBudgetExceededException
from ...schemas.algebra import GroupsErrorCode


# Ошибки входных данных
class InvalidGroupSpecException(BadInputException):
    """Описание группы не соответствует формату (2)."""

    error_code = GroupsErrorCode.INVALID_GROUP_SPEC


class NotLatinSquareException(BadInputException):
    """Таблица умножения не является латинским квадратом (2)."""

    error_code = GroupsErrorCode.NOT_LATIN_SQUARE


class NotAssociativeException(BadInputException):
    """Таблица умножения не ассоциативна (2)."""

    error_code = GroupsErrorCode.NOT_ASSOCIATIVE


class UnknownGroupException(BadInputException):
    """Группа не найдена ни в библиотеке, ни в файловой системе (2)."""

    error_code = GroupsErrorCode.UNKNOWN_GROUP


class NotASubgroupException(BadInputException):
    """Множество не является подгруппой (2)."""

    error_code = GroupsErrorCode.NOT_A_SUBGROUP


class InvalidActionException(BadInputException):
    """Действие не является действием автоморфизмами (2)."""

    error_code = GroupsErrorCode.INVALID_ACTION


class InvalidProductDatumException(BadInputException):
    """Некорректные аргументы для данных произведения орбит (2)."""

    error_code = GroupsErrorCode.INVALID_PRODUCT_DATUM


# Ошибки размера
class GeneratorClosureException(SizeBudgetExceededException):
    """Порождающие не замыкаются в пределах ограничения (3)."""

    error_code = GroupsErrorCode.GENERATOR_CLOSURE


class GroupTooLargeException(SizeBudgetExceededException):
    """Порядок группы превышает ограничение (3)."""

    error_code = GroupsErrorCode.GROUP_TOO_LARGE


# Внутренние ошибки
class ProductDatumInconsistentException(InternalComputationException):
    """Не найдено решение уравнения на представителей орбит (4)."""

    error_code = GroupsErrorCode.PRODUCT_DATUM_INCONSISTENT
