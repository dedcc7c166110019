import logging
from typing import Callable, Sequence

from .exceptions import UnknownGeneratorException
from .types import ProductMethod, Word
from ..cup import cup, unit_class
from ..decomp import DecompositionContext, decompose, decomposed_product, direct_oracle_product
from ..groups import Subgroup
from ..linalg import FpMatrix, solve
from ..resolutions import CohomologyClass, CohomologySpace
from ..types import Degree

logger = logging.getLogger(__name__)

Multiply = Callable[[CohomologyClass, CohomologyClass], CohomologyClass]


class GradedRing:
    """Градуированное кольцо когомологий с умножением и кэшем произведений слов.

    Attributes:
        space: Компонента степени n.
        multiply: Умножение классов.
        unit: Единица.
        lo: Нижняя граница вычислимых степеней (исключительно).
        hi: Верхняя граница вычислимых степеней (исключительно).
    """

    def __init__(
        self, space: Callable[[Degree], CohomologySpace], multiply: Multiply, unit: CohomologyClass, lo: int, hi: int
    ):
        self.space = space
        self.multiply = multiply
        self.unit = unit
        self.lo = lo
        self.hi = hi
        self._words: dict[tuple, CohomologyClass] = {}

    @property
    def p(self) -> int:
        return self.unit.space.p

    def computable(self, degree: Degree) -> bool:
        return self.lo < degree < self.hi

    def product(self, factors: Sequence[CohomologyClass], key: tuple | None = None) -> CohomologyClass:
        """Произведение слева направо; при заданном ключе промежуточные произведения кэшируются по префиксам."""
        if not factors:
            return self.unit
        if key is None:
            result = factors[0]
            for factor in factors[1:]:
                result = self.multiply(result, factor)
            return result
        cached = self._words.get(key)
        if cached is None:
            if len(factors) == 1:
                cached = factors[0]
            else:
                cached = self.multiply(self.product(factors[:-1], key[:-1]), factors[-1])
            self._words[key] = cached
        return cached

    def inverse(self, element: CohomologyClass) -> CohomologyClass | None:
        """Класс δ степени -n с element·δ = 1, если он существует в окне."""
        degree = -element.degree
        if not self.computable(degree):
            return None
        space = self.space(degree)
        if space.dim == 0 or self.unit.is_zero():
            return None
        images = [self.multiply(element, space.basis_class(index)).coordinates for index in range(space.dim)]
        matrix = FpMatrix.from_columns(self.p, images, self.unit.space.dim)
        solution = solve(matrix, self.unit.coordinates)
        return None if solution is None else space.element(solution)


class RingEngine:
    """Движок умножения в ĤH*(kG, kG) ≅ Ĥ*(H, kG) и в локальных кольцах Ĥ*(V, k).

    Глобальное умножение идёт через формулу произведения по двойным смежным классам
    или напрямую через cup со спариванием умножения.
    """

    def __init__(self, context: DecompositionContext, method: ProductMethod = ProductMethod.FORMULA):
        self.context = context
        self.method = ProductMethod(method)
        lo, hi = context.window
        self.lo, self.hi = lo, hi
        self.ring = GradedRing(context.space, self.multiply, context.unit(), lo, hi)
        self._local: dict[Subgroup, GradedRing] = {}

    def multiply(self, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
        if self.method == ProductMethod.ORACLE:
            return direct_oracle_product(self.context, a, b)
        context = self.context
        return decomposed_product(context, decompose(context, a), decompose(context, b))

    def local(self, subgroup: Subgroup) -> GradedRing:
        """Кольцо Ĥ*(V, k) на той же резольвенте."""
        ring = self._local.get(subgroup)
        if ring is None:
            context = self.context
            ring = GradedRing(
                lambda n: context.workspace.space(n, context.trivial, subgroup),
                cup,
                unit_class(context.resolution, context.trivial, subgroup),
                self.lo,
                self.hi,
            )
            self._local[subgroup] = ring
        return ring

    def evaluate(self, word: Word, table: dict[str, CohomologyClass]) -> CohomologyClass:
        """Значение слова из имён образующих, произведение слева направо с кэшем по префиксам.

        Raises:
            UnknownGeneratorException: Имя отсутствует в таблице.
            WindowExhaustedException: Промежуточная степень вне окна.
        """
        factors = []
        for name in word:
            if name not in table:
                raise UnknownGeneratorException(
                    key="ringpres.errors.unknown_generator",
                    fallback=f"Unknown generator {name!r}",
                    translation_params={"name": name},
                )
            factors.append(table[name])
        return self.ring.product(factors, key=("names", *word))

    def __repr__(self) -> str:
        return f"RingEngine({self.context!r}, method={self.method})"
