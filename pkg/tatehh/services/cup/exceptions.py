from ..exceptions import BadInputException, InternalComputationException
from ...schemas.algebra import CupErrorCode


# Ошибки входных данных
class PairingMismatchException(BadInputException):
    """Спаривание не согласовано с модулями коэффициентов сомножителей (2)."""

    error_code = CupErrorCode.PAIRING_MISMATCH


class SpaceMismatchException(BadInputException):
    """Сомножители заданы над разными резольвентами или подгруппами (2)."""

    error_code = CupErrorCode.SPACE_MISMATCH


class DiagonalUnavailableException(BadInputException):
    """Выбранный способ построения диагонали неприменим к резольвенте или клетке (2)."""

    error_code = CupErrorCode.DIAGONAL_UNAVAILABLE


# Внутренние ошибки
class ProductNotCocycleException(InternalComputationException):
    """Произведение коциклов не является коциклом (4)."""

    error_code = CupErrorCode.PRODUCT_NOT_COCYCLE
