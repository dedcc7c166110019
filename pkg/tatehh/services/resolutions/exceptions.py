from ..exceptions import BadInputException, InternalComputationException, SizeBudgetExceededException
from ...schemas.algebra import ResolutionsErrorCode


# Ошибки входных данных
class InvalidWindowException(BadInputException):
    """Окно степеней не содержит [-1, 1] (2)."""

    error_code = ResolutionsErrorCode.INVALID_WINDOW


class WindowExhaustedException(BadInputException):
    """Запрошенная степень выходит за окно резольвенты (2)."""

    error_code = ResolutionsErrorCode.WINDOW_EXHAUSTED


class BackendUnavailableException(BadInputException):
    """Выбранная реализация резольвенты неприменима к группе (2)."""

    error_code = ResolutionsErrorCode.BACKEND_UNAVAILABLE


class NotACocycleException(BadInputException):
    """Коцепь не является коциклом (2)."""

    error_code = ResolutionsErrorCode.NOT_A_COCYCLE


class SpaceMismatchException(BadInputException):
    """Классы когомологий лежат в разных группах (2)."""

    error_code = ResolutionsErrorCode.SPACE_MISMATCH


# Ошибки размера
class ResolutionTooLargeException(SizeBudgetExceededException):
    """Член резольвенты превышает бюджет размера (3)."""

    error_code = ResolutionsErrorCode.SIZE_BUDGET_EXCEEDED


# Внутренние ошибки
class ResolutionInvariantException(InternalComputationException):
    """Нарушен инвариант полной резольвенты (4)."""

    error_code = ResolutionsErrorCode.RESOLUTION_INVARIANT_VIOLATED


class LiftInconsistentException(InternalComputationException):
    """Линейная система подъёма цепного отображения несовместна (4)."""

    error_code = ResolutionsErrorCode.LIFT_INCONSISTENT
