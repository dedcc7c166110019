from dataclasses import dataclass

from ...core.common import StringEnum


class PropertyFamily(StringEnum):
    MAPS = "maps"
    PRODUCTS = "products"
    COEFFICIENTS = "coefficients"
    STRUCTURE = "structure"


@dataclass(frozen=True, slots=True)
class PropertyVerdict:
    """Результат проверки одного тождества.

    Attributes:
        name: Имя тождества.
        family: Группа тождеств.
        passed: Тождество выполнено на всех проверенных случаях.
        checked: Число проверенных случаев.
        total: Число всех случаев до выборки.
        detail: Описание первого нарушающего случая.
    """

    name: str
    family: PropertyFamily
    passed: bool
    checked: int
    total: int
    detail: str = ""
