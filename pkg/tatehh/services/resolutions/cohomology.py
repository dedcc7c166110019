import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .backends import complete_resolution, default_window
from .cochains import CochainComplex
from .complete import CompleteResolution
from .exceptions import NotACocycleException, SpaceMismatchException
from .types import Backend
from ..groups import FiniteGroup, Subgroup
from ..kgmodules import KGModule, trivial_module
from ..linalg import FpMatrix, Subquotient, kernel_basis, subquotient_basis
from ..types import Degree, Prime, Vector, Window

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CohomologySpace:
    """Группа когомологий Тейта Ĥⁿ(V, M) с базисом представителей.

    Attributes:
        complex: Комплекс коцепей над V.
        degree: Степень n.
        basis: Представители-коциклы и проекция коциклов на координаты.
    """

    complex: CochainComplex
    degree: Degree
    basis: Subquotient

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def subgroup(self) -> Subgroup:
        return self.complex.subgroup

    @property
    def module(self) -> KGModule:
        return self.complex.module

    @property
    def p(self) -> Prime:
        return self.complex.p

    @property
    def reps(self) -> FpMatrix:
        return self.basis.reps

    @property
    def projection(self) -> FpMatrix:
        return self.basis.projection

    @property
    def cochain_dim(self) -> int:
        return self.basis.reps.rows

    def is_cocycle(self, cochain: Vector) -> bool:
        return self.complex.is_cocycle(self.degree, cochain)

    def class_of(self, cochain: Vector) -> "CohomologyClass":
        """Метод построения класса коцикла.

        Raises:
            NotACocycleException: Коцепь не является коциклом.
        """
        cochain = np.mod(np.asarray(cochain, dtype=np.int64).reshape(-1), self.p)
        if not self.is_cocycle(cochain):
            raise NotACocycleException(
                key="resolutions.errors.not_a_cocycle",
                fallback=f"Cochain of degree {self.degree} is not a cocycle",
                translation_params={"degree": self.degree},
            )
        return CohomologyClass(space=self, coordinates=self.basis.project(cochain), representative=cochain)

    def element(self, coordinates: Vector) -> "CohomologyClass":
        coordinates = np.mod(np.asarray(coordinates, dtype=np.int64).reshape(-1), self.p)
        return CohomologyClass(space=self, coordinates=coordinates, representative=self.reps.apply(coordinates))

    def basis_class(self, index: int) -> "CohomologyClass":
        coordinates = np.zeros(self.dim, dtype=np.int64)
        coordinates[index] = 1
        return self.element(coordinates)

    def zero(self) -> "CohomologyClass":
        return self.element(np.zeros(self.dim, dtype=np.int64))

    def describe(self) -> str:
        return f"Ĥ^{self.degree}({self.subgroup.describe()}, {self.module.name})"

    def __repr__(self) -> str:
        return f"CohomologySpace({self.describe()}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """Класс когомологий с координатами и представителем-коциклом.

    Attributes:
        space: Группа когомологий.
        coordinates: Координаты в базисе группы.
        representative: Коцикл, проекция которого равна coordinates.
    """

    space: CohomologySpace
    coordinates: Vector
    representative: Vector

    @property
    def degree(self) -> Degree:
        return self.space.degree

    def is_zero(self) -> bool:
        return not bool(np.any(self.coordinates))

    def _check(self, other: "CohomologyClass") -> None:
        if other.space is not self.space:
            raise SpaceMismatchException(
                key="resolutions.errors.space_mismatch",
                fallback=f"Classes live in different spaces: {self.space.describe()} and {other.space.describe()}",
            )

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check(other)
        p = self.space.p
        return CohomologyClass(
            space=self.space,
            coordinates=np.mod(self.coordinates + other.coordinates, p),
            representative=np.mod(self.representative + other.representative, p),
        )

    def scale(self, factor: int) -> "CohomologyClass":
        p = self.space.p
        factor %= p
        return CohomologyClass(
            space=self.space,
            coordinates=np.mod(self.coordinates * factor, p),
            representative=np.mod(self.representative * factor, p),
        )

    def __neg__(self) -> "CohomologyClass":
        return self.scale(-1)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return other.space is self.space and bool(np.array_equal(self.coordinates, other.coordinates))

    __hash__ = None

    def __repr__(self) -> str:
        return f"CohomologyClass({self.space.describe()}, {self.coordinates.tolist()})"


def _zero_space(complex_: CochainComplex, n: Degree) -> CohomologySpace:
    size = complex_.dim(n)
    p = complex_.p
    basis = Subquotient(reps=FpMatrix.zeros(p, size, 0), projection=FpMatrix.zeros(p, 0, size), boundary_dim=0)
    return CohomologySpace(complex=complex_, degree=n, basis=basis)


def tate_cohomology(
    resolution: CompleteResolution, module: KGModule, n: Degree, subgroup: Subgroup | None = None
) -> CohomologySpace:
    """Функция вычисления группы когомологий Тейта Ĥⁿ(V, M).

    Процесс включает:
    1. Проверку наличия d_n и d_{n+1} в окне резольвенты
    2. Нулевой ответ без линейной алгебры, если p не делит |V|
    3. Базис ker δ_n по модулю im δ_{n-1}

    Args:
        resolution: Полная резольвента группы G.
        module: Модуль коэффициентов над G.
        n: Степень.
        subgroup: Подгруппа V ≤ G (по умолчанию G).

    Returns:
        Группа когомологий с детерминированным базисом.

    Raises:
        WindowExhaustedException: Степени n-1, n, n+1 не помещаются в окно.
    """
    complex_ = CochainComplex.build(resolution, module, subgroup)
    resolution.require(n - 1, n, n + 1)

    def compute() -> CohomologySpace:
        if complex_.subgroup.order % resolution.p:
            return _zero_space(complex_, n)
        cycles = kernel_basis(complex_.coboundary(n))
        boundaries = complex_.coboundary(n - 1)
        space = CohomologySpace(complex=complex_, degree=n, basis=subquotient_basis(cycles, boundaries))
        logger.debug(f"{space.describe()} has dimension {space.dim}")
        return space

    return resolution.cached(("space", complex_.subgroup, module, n), compute)


class TateWorkspace:
    """Рабочее пространство вычислений над фиксированными G, p и окном.

    Резольвента строится лениво при первом обращении и переиспользуется для всех подгрупп и модулей.
    """

    def __init__(self, group: FiniteGroup, p: Prime, window: Window | None = None, backend: Backend = Backend.AUTO):
        self.group = group
        self.p = p
        self.window = window or default_window()
        self.backend = Backend(backend)

    @cached_property
    def resolution(self) -> CompleteResolution:
        return complete_resolution(self.group, self.p, self.window, self.backend)

    @cached_property
    def trivial(self) -> KGModule:
        return trivial_module(self.group, self.p)

    def space(self, n: Degree, module: KGModule | None = None, subgroup: Subgroup | None = None) -> CohomologySpace:
        return tate_cohomology(self.resolution, module or self.trivial, n, subgroup)

    def dimension(self, n: Degree, module: KGModule | None = None, subgroup: Subgroup | None = None) -> int:
        """Размерность Ĥⁿ(V, M); при p ∤ |V| резольвента не строится."""
        order = subgroup.order if subgroup is not None else self.group.order
        if order % self.p:
            return 0
        return self.space(n, module, subgroup).dim

    def __repr__(self) -> str:
        return f"TateWorkspace({self.group.name}, p={self.p}, window={self.window}, backend={self.backend})"
