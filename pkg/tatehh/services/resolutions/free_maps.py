from dataclasses import dataclass

import numpy as np

from .types import FreeMapTerms
from ..groups import FiniteGroup
from ..linalg import FpMatrix
from ..types import Prime


@dataclass(slots=True, frozen=True, eq=False)
class FreeMap:
    """Гомоморфизм свободных kG-модулей, заданный образами базисных элементов.

    Строка (s, t, g, c) массива terms означает, что d(b_s) содержит слагаемое c·g·b_t;
    тогда d(h·b_s) содержит c·(hg)·b_t.

    Attributes:
        source_rank: Ранг источника.
        target_rank: Ранг цели.
        terms: Целочисленный массив формы (m, 4).
    """

    source_rank: int
    target_rank: int
    terms: FreeMapTerms

    def __post_init__(self) -> None:
        terms = np.asarray(self.terms, dtype=np.int64).reshape(-1, 4)
        terms.setflags(write=False)
        object.__setattr__(self, "terms", terms)

    @property
    def sources(self) -> np.ndarray:
        return self.terms[:, 0]

    @property
    def targets(self) -> np.ndarray:
        return self.terms[:, 1]

    @property
    def elements(self) -> np.ndarray:
        return self.terms[:, 2]

    @property
    def coefficients(self) -> np.ndarray:
        return self.terms[:, 3]

    def expanded(self, group: FiniteGroup, p: Prime) -> FpMatrix:
        """Метод построения матрицы над k в развёрнутых базисах h·b_t (номер t·|G| + h).

        Args:
            group: Группа.
            p: Характеристика.

        Returns:
            Матрица (target_rank·|G|) × (source_rank·|G|).
        """
        n = group.order
        data = np.zeros((self.target_rank * n, self.source_rank * n), dtype=np.int64)
        if len(self.terms):
            h = np.arange(n)
            rows = self.targets[:, None] * n + group.table[h[None, :], self.elements[:, None]]
            cols = self.sources[:, None] * n + h[None, :]
            values = np.broadcast_to(np.mod(self.coefficients, p)[:, None], rows.shape)
            np.add.at(data, (rows, cols), values)
        return FpMatrix(p, data)

    def dual(self, group: FiniteGroup) -> "FreeMap":
        """Двойственное отображение в базисах β_t с β_t(g·b_s) = δ_{ts}δ_{g,1}.

        Транспонирование развёрнутой матрицы переводит слагаемое (s, t, g, c) в (t, s, g⁻¹, c).
        """
        terms = self.terms.copy()
        terms[:, [0, 1]] = self.terms[:, [1, 0]]
        terms[:, 2] = group.inverse[self.terms[:, 2]]
        return FreeMap(source_rank=self.target_rank, target_rank=self.source_rank, terms=terms)

    @classmethod
    def from_images(cls, group: FiniteGroup, images: np.ndarray, target_rank: int) -> "FreeMap":
        """Метод построения отображения по образам базисных элементов.

        Args:
            group: Группа.
            images: Матрица (target_rank·|G|) × r, столбец s есть d(b_s) в развёрнутом базисе.
            target_rank: Ранг цели.

        Returns:
            Отображение свободного модуля ранга r.
        """
        n = group.order
        positions, sources = np.nonzero(images)
        terms = np.stack([sources, positions // n, positions % n, images[positions, sources]], axis=1)
        return cls(source_rank=int(images.shape[1]), target_rank=target_rank, terms=terms)
