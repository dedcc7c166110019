from dataclasses import dataclass

import numpy as np

from ..groups import Subgroup
from ..resolutions import CohomologyClass
from ..types import Degree, Vector
from ...core.common import StringEnum

ABELIAN_STRUCTURE = "kG ⊗ Ĥ*(G,k)"


class RepresentativeChoice(StringEnum):
    """Выбор представителей x и y в формуле произведения."""

    LEAST = "least"
    GREATEST = "greatest"


@dataclass(frozen=True, eq=False)
class Orbit:
    """Орбита действия H на G.

    Attributes:
        index: Номер орбиты, с нуля; орбита единицы имеет номер 0.
        representative: Наименьший элемент орбиты g_i.
        members: Элементы орбиты по возрастанию.
        stabilizer: Стабилизатор H_i = Stab_H(g_i).
    """

    index: int
    representative: int
    members: tuple[int, ...]
    stabilizer: Subgroup

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class DecomposedClass:
    """Класс Ĥⁿ(H, kG), разложенный по орбитам: αᵢ ∈ Ĥⁿ(H_i, k)."""

    degree: Degree
    components: tuple[CohomologyClass, ...]

    @property
    def coordinates(self) -> Vector:
        if not self.components:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([component.coordinates for component in self.components])

    def is_zero(self) -> bool:
        return all(component.is_zero() for component in self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecomposedClass):
            return NotImplemented
        return self.degree == other.degree and all(
            mine == theirs for mine, theirs in zip(self.components, other.components, strict=True)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"DecomposedClass(n={self.degree}, {[c.coordinates.tolist() for c in self.components]})"


@dataclass(frozen=True, eq=False)
class ProductSummand:
    """Слагаемое формулы произведения для представителя x двойного смежного класса H_i\\H/H_j.

    Attributes:
        x: Представитель двойного смежного класса.
        k: Орбита произведения g_i · ^x g_j.
        y: Элемент H с ^y(g_i · ^x g_j) = g_k.
        subgroup: V = ^{yx}H_j ∩ ^y H_i.
        local: cor^{H_k}_V(res y*α ⌣ res (yx)*β) в Ĥ(H_k, k).
        value: ψ_k(local) в Ĥ(H, kG).
    """

    x: int
    k: int
    y: int
    subgroup: Subgroup
    local: CohomologyClass
    value: CohomologyClass


@dataclass(frozen=True, eq=False)
class ProductTrace:
    """Результат формулы произведения вместе со слагаемыми по двойным смежным классам."""

    i: int
    j: int
    total: CohomologyClass
    summands: tuple[ProductSummand, ...]

    def nonzero_summands(self) -> tuple[ProductSummand, ...]:
        return tuple(summand for summand in self.summands if not summand.value.is_zero())


@dataclass(frozen=True)
class AbelianRing:
    """Размерности ĤH*(kG, kG) ≅ kG ⊗ Ĥ*(G, k) для абелевой G.

    Attributes:
        group: Имя группы.
        p: Характеристика.
        dimensions: Размерность по степеням.
        structure: Описание структуры кольца.
    """

    group: str
    p: int
    dimensions: dict[Degree, int]
    structure: str = ABELIAN_STRUCTURE
