import logging
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .exceptions import ResolutionInvariantException, WindowExhaustedException
from .free_maps import FreeMap
from .types import Backend
from ..groups import FiniteGroup
from ..linalg import FpMatrix, rank
from ..types import Degree, Prime, Window

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CompleteResolution:
    """Полная резольвента k над kG в окне степеней.

    Члены X_n свободны ранга ranks[n]; d_n: X_n → X_{n-1} задан для lo < n ≤ hi.
    Отрицательная часть двойственна неотрицательной, d_0 = η∘ε склеивает их.

    Attributes:
        group: Группа G.
        p: Характеристика.
        window: Окно [lo, hi].
        ranks: Ранги членов.
        differentials: Дифференциалы d_n.
        backend: Реализация.
        basis_labels: Подписи kG-базисов членов.
    """

    group: FiniteGroup
    p: Prime
    window: Window
    ranks: dict[Degree, int]
    differentials: dict[Degree, FreeMap]
    backend: Backend
    basis_labels: dict[Degree, tuple[str, ...]] = field(default_factory=dict)
    _cache: dict[Any, Any] = field(default_factory=dict, repr=False)

    @property
    def lo(self) -> Degree:
        return self.window[0]

    @property
    def hi(self) -> Degree:
        return self.window[1]

    def contains(self, n: Degree) -> bool:
        return self.lo <= n <= self.hi

    def rank(self, n: Degree) -> int:
        if not self.contains(n):
            self._exhausted(n)
        return self.ranks[n]

    def dim(self, n: Degree) -> int:
        return self.rank(n) * self.group.order

    def differential(self, n: Degree) -> FreeMap:
        """Дифференциал d_n: X_n → X_{n-1}."""
        if not (self.lo < n <= self.hi):
            self._exhausted(n)
        return self.differentials[n]

    def expanded(self, n: Degree) -> FpMatrix:
        """Матрица d_n над k в развёрнутых базисах."""
        return self.cached(("expanded", n), lambda: self.differential(n).expanded(self.group, self.p))

    def augmentation(self) -> FpMatrix:
        """ε: X_0 = kG → k, сумма координат."""
        return FpMatrix(self.p, np.ones((1, self.group.order), dtype=np.int64))

    def labels(self, n: Degree) -> tuple[str, ...]:
        return self.basis_labels.get(n) or tuple(f"b{n}_{s}" for s in range(self.rank(n)))

    def cached(self, key: Any, factory: Callable[[], Any]) -> Any:
        """Мемоизация производных данных резольвенты; повторное заполнение идемпотентно."""
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    def require(self, *degrees: Degree) -> None:
        for n in degrees:
            if not self.contains(n):
                self._exhausted(n)

    def _exhausted(self, n: Degree) -> None:
        raise WindowExhaustedException(
            key="resolutions.errors.window_exhausted",
            fallback=f"Degree {n} lies outside the resolution window [{self.lo}, {self.hi}]",
            translation_params={"degree": n, "lo": self.lo, "hi": self.hi},
        )

    def verify(self) -> None:
        """Метод проверки инвариантов полной резольвенты.

        Проверяются d∘d = 0, точность во внутренних степенях окна по рангам,
        ε∘d_1 = 0 и склейка d_0 = η∘ε.

        Raises:
            ResolutionInvariantException: Если инвариант нарушен.
        """
        for n in range(self.lo + 2, self.hi + 1):
            if not (self.expanded(n - 1) @ self.expanded(n)).is_zero():
                self._violated(f"d_{n - 1} d_{n} != 0")
        for n in range(self.lo + 1, self.hi):
            if rank(self.expanded(n)) + rank(self.expanded(n + 1)) != self.dim(n):
                self._violated(f"complex is not exact at degree {n}")
        if self.contains(1) and not (self.augmentation() @ self.expanded(1)).is_zero():
            self._violated("augmentation does not vanish on the image of d_1")
        if self.contains(-1):
            # η∘ε в развёрнутых базисах X_0 = kG и X_{-1} = (kG)* есть матрица из единиц
            if self.rank(0) != 1 or self.rank(-1) != 1 or not bool(np.all(self.expanded(0).data == 1)):
                self._violated("d_0 is not a coaugmentation composed with the augmentation")
        logger.debug(f"Resolution of {self.group.name} over F_{self.p} in {self.window} verified")

    def _violated(self, message: str) -> None:
        raise ResolutionInvariantException(
            key="resolutions.errors.invariant_violated",
            fallback=f"{self.backend} resolution of {self.group.name}: {message}",
        )

    def __repr__(self) -> str:
        return f"CompleteResolution({self.group.name}, p={self.p}, window={self.window}, backend={self.backend})"
