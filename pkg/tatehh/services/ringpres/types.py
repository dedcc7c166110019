from dataclasses import dataclass, field
from typing import TYPE_CHECKING, TypeAlias

from ..resolutions import CohomologyClass
from ..types import Degree, Prime, Vector, Window
from ...core.common import StringEnum

if TYPE_CHECKING:
    from .engine import RingEngine

# Последовательность имён образующих в порядке умножения
Word: TypeAlias = tuple[str, ...]


class ProductMethod(StringEnum):
    """Способ умножения в Ĥ*(H, kG)."""

    FORMULA = "formula"
    ORACLE = "oracle"


class Naming(StringEnum):
    """Именование образующих."""

    GENERIC = "generic"
    NAMED = "named"


@dataclass(frozen=True, eq=False)
class Generator:
    """Образующая кольца.

    Attributes:
        name: Имя.
        degree: Степень.
        element: Класс в Ĥ^degree(H, kG).
        origin: Откуда взята образующая (слой ψ_i и локальное имя).
    """

    name: str
    degree: Degree
    element: CohomologyClass
    origin: str

    @property
    def coordinates(self) -> Vector:
        return self.element.coordinates


@dataclass(frozen=True)
class Term:
    """Член соотношения coefficient·g_1⋯g_m."""

    coefficient: int
    word: Word


@dataclass(frozen=True)
class Relation:
    """Соотношение Σ членов = 0; для неоднородного соотношения degree есть наименьшая степень членов."""

    degree: Degree
    terms: tuple[Term, ...]
    text: str

    def parts(self, degrees: dict[str, Degree]) -> dict[Degree, tuple[Term, ...]]:
        """Однородные части по возрастанию степени; пустое соотношение даёт одну пустую часть в degree."""
        grouped: dict[Degree, list[Term]] = {}
        for term in self.terms:
            grouped.setdefault(sum(degrees[name] for name in term.word), []).append(term)
        if not grouped:
            return {self.degree: ()}
        return {degree: tuple(grouped[degree]) for degree in sorted(grouped)}


@dataclass(frozen=True)
class RelationVerdict:
    """Результат проверки соотношения.

    Attributes:
        text: Соотношение.
        degree: Степень.
        passed: Значение равно нулю.
        witness: Координаты значения в Ĥ^degree(H, kG).
    """

    text: str
    degree: Degree
    passed: bool
    witness: tuple[int, ...]


@dataclass(frozen=True)
class NilpotencyVerdict:
    """Наименьшая степень образующей, равная нулю, или None в пределах окна."""

    name: str
    degree: Degree
    exponent: int | None
    checked_up_to: int


@dataclass(frozen=True, eq=False)
class RingPresentation:
    """Представление кольца ĤH*(kG, kG), проверенное в пределах окна.

    Attributes:
        group: Имя группы.
        p: Характеристика.
        window: Окно вычислений.
        generators: Образующие в порядке выбора.
        relations: Соотношения (порождающее множество ядра отображения вычисления мономов).
        aliases: Дополнительные именованные классы, доступные в соотношениях.
        engine: Движок умножения, которым вычислены соотношения; None для нулевого кольца (p не делит |H|).
        complete: Мономы порождают все компоненты окна.
        note: Оговорка о границах применимости.
    """

    group: str
    p: Prime
    window: Window
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]
    engine: "RingEngine | None"
    aliases: dict[str, CohomologyClass] = field(default_factory=dict)
    complete: bool = True
    note: str = ""

    def table(self) -> dict[str, CohomologyClass]:
        """Таблица имён: образующие и именованные классы."""
        names = {generator.name: generator.element for generator in self.generators}
        names.update(self.aliases)
        return names

    @property
    def degrees(self) -> tuple[Degree, ...]:
        return tuple(generator.degree for generator in self.generators)
