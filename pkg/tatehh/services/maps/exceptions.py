from ..exceptions import BadInputException, InternalComputationException
from ...schemas.algebra import MapsErrorCode


# Ошибки входных данных
class NotASubgroupException(BadInputException):
    """Подгруппа не содержится в объемлющей (2)."""

    error_code = MapsErrorCode.NOT_A_SUBGROUP


class StabilizerViolationException(BadInputException):
    """Подгруппа не стабилизирует элемент, по которому строится θ или π (2)."""

    error_code = MapsErrorCode.STABILIZER_VIOLATION


class SpaceMismatchException(BadInputException):
    """Отображения нельзя скомпоновать или сложить (2)."""

    error_code = MapsErrorCode.SPACE_MISMATCH


# Внутренние ошибки
class MapNotWellDefinedException(InternalComputationException):
    """Образ коцикла не является коциклом (4)."""

    error_code = MapsErrorCode.MAP_NOT_WELL_DEFINED
