import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cochain_maps import conjugate_cochain, corestrict_cochain, pi_cochain, restrict_cochain, theta_cochain
from .exceptions import (
    MapNotWellDefinedException,
    NotASubgroupException,
    SpaceMismatchException,
    StabilizerViolationException,
)
from .types import Provenance
from ..groups import Subgroup
from ..kgmodules import KGModule
from ..linalg import FpMatrix
from ..resolutions import CohomologyClass, CohomologySpace, tate_cohomology
from ..types import Vector

logger = logging.getLogger(__name__)

CochainMap = Callable[[Vector], Vector]


@dataclass(frozen=True, eq=False)
class CohomologyMap:
    """Линейное отображение групп когомологий в координатах их базисов.

    Attributes:
        source: Группа-источник.
        target: Группа-цель.
        matrix: Матрица target.dim × source.dim.
        provenance: Происхождение (res, cor, conj(g), theta(a), pi(a), composite, sum).
    """

    source: CohomologySpace
    target: CohomologySpace
    matrix: FpMatrix
    provenance: str

    def apply(self, cls: CohomologyClass) -> CohomologyClass:
        if cls.space is not self.source:
            raise SpaceMismatchException(
                key="maps.errors.space_mismatch",
                fallback=f"Map {self.provenance} is defined on {self.source.describe()}, not {cls.space.describe()}",
            )
        return self.target.element(self.matrix.apply(cls.coordinates))

    def __matmul__(self, other: "CohomologyMap") -> "CohomologyMap":
        if other.target is not self.source:
            raise SpaceMismatchException(
                key="maps.errors.space_mismatch",
                fallback=f"Cannot compose {self.provenance} after {other.provenance}",
            )
        return CohomologyMap(
            source=other.source,
            target=self.target,
            matrix=self.matrix @ other.matrix,
            provenance=f"{Provenance.COMPOSITE}({self.provenance}, {other.provenance})",
        )

    def __add__(self, other: "CohomologyMap") -> "CohomologyMap":
        if other.source is not self.source or other.target is not self.target:
            raise SpaceMismatchException(
                key="maps.errors.space_mismatch",
                fallback=f"Cannot add {self.provenance} and {other.provenance}",
            )
        return CohomologyMap(
            source=self.source,
            target=self.target,
            matrix=self.matrix + other.matrix,
            provenance=f"{Provenance.SUM}({self.provenance}, {other.provenance})",
        )

    def scale(self, factor: int) -> "CohomologyMap":
        return CohomologyMap(self.source, self.target, self.matrix.scale(factor), f"{factor}*{self.provenance}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyMap):
            return NotImplemented
        return other.source is self.source and other.target is self.target and other.matrix == self.matrix

    __hash__ = None

    def __repr__(self) -> str:
        return f"CohomologyMap({self.provenance}: {self.source.describe()} -> {self.target.describe()})"


def identity_map(space: CohomologySpace) -> CohomologyMap:
    return CohomologyMap(space, space, FpMatrix.identity(space.p, space.dim), str(Provenance.IDENTITY))


def zero_map(source: CohomologySpace, target: CohomologySpace) -> CohomologyMap:
    return CohomologyMap(source, target, FpMatrix.zeros(source.p, target.dim, source.dim), "0")


def _induced(
    source: CohomologySpace, target: CohomologySpace, cochain_map: CochainMap, provenance: str
) -> CohomologyMap:
    """Метод построения отображения когомологий по отображению коцепей.

    Образы представителей базиса проверяются на коцикличность и проецируются в базис цели.

    Args:
        source: Группа-источник.
        target: Группа-цель.
        cochain_map: Отображение коцепей C^n(source) → C^n(target).
        provenance: Происхождение для отчётов.

    Returns:
        Отображение когомологий, кэшированное в резольвенте.

    Raises:
        MapNotWellDefinedException: Образ коцикла не является коциклом.
    """

    def compute() -> CohomologyMap:
        images = [cochain_map(source.reps.column(i)) for i in range(source.dim)]
        for image in images:
            if not target.is_cocycle(image):
                raise MapNotWellDefinedException(
                    key="maps.errors.not_well_defined",
                    fallback=f"{provenance} sends a cocycle of {source.describe()} to a non-cocycle",
                )
        columns = FpMatrix.from_columns(source.p, images, target.cochain_dim)
        logger.debug(f"Induced {provenance}: {source.describe()} -> {target.describe()}")
        return CohomologyMap(source, target, target.projection @ columns, provenance)

    resolution = source.complex.resolution
    return resolution.cached(("map", provenance, source, target), compute)


def _space(
    source: CohomologySpace, module: KGModule | None = None, subgroup: Subgroup | None = None
) -> CohomologySpace:
    return tate_cohomology(
        source.complex.resolution, module or source.module, source.degree, subgroup or source.subgroup
    )


def restriction_map(source: CohomologySpace, subgroup: Subgroup) -> CohomologyMap:
    """Функция построения ограничения res^V_{V'}.

    Args:
        source: Группа Ĥⁿ(V, M).
        subgroup: Подгруппа V' ⊆ V.

    Returns:
        Отображение Ĥⁿ(V, M) → Ĥⁿ(V', M).

    Raises:
        NotASubgroupException: V' не содержится в V.
    """
    _check_contained(subgroup, source.subgroup)
    target = _space(source, subgroup=subgroup)
    return _induced(
        source,
        target,
        lambda cochain: restrict_cochain(source.complex, target.complex, source.degree, cochain),
        str(Provenance.RES),
    )


def corestriction_map(source: CohomologySpace, ambient: Subgroup) -> CohomologyMap:
    """Функция построения коограничения cor^V_{V'}.

    Args:
        source: Группа Ĥⁿ(V', M).
        ambient: Подгруппа V ⊇ V'.

    Returns:
        Отображение Ĥⁿ(V', M) → Ĥⁿ(V, M).

    Raises:
        NotASubgroupException: V' не содержится в V.
    """
    _check_contained(source.subgroup, ambient)
    target = _space(source, subgroup=ambient)
    return _induced(
        source,
        target,
        lambda cochain: corestrict_cochain(source.complex, target.complex, source.degree, cochain),
        str(Provenance.COR),
    )


def conjugation_map(source: CohomologySpace, g: int) -> CohomologyMap:
    """Функция построения сопряжения g*: Ĥⁿ(V, M) → Ĥⁿ(^gV, M)."""
    target = _space(source, subgroup=source.subgroup.conjugate(g))
    group = source.complex.resolution.group
    return _induced(
        source,
        target,
        lambda cochain: conjugate_cochain(source.complex, target.complex, source.degree, cochain, g),
        f"{Provenance.CONJ}({group.label(g)})",
    )


def _check_contained(subgroup: Subgroup, ambient: Subgroup) -> None:
    if not subgroup.is_subgroup_of(ambient):
        raise NotASubgroupException(
            key="maps.errors.not_a_subgroup",
            fallback=f"{subgroup.describe()} is not contained in {ambient.describe()}",
        )


def _check_stabilizer(module: KGModule, subgroup: Subgroup, a: int) -> None:
    if not 0 <= a < module.dim:
        raise StabilizerViolationException(
            key="maps.errors.stabilizer_violation",
            fallback=f"Index {a} is not a basis vector of {module.name}",
        )
    unit = np.zeros(module.dim, dtype=np.int64)
    unit[a] = 1
    fixed = all(np.array_equal(module.action[v][:, a], unit) for v in subgroup.members)
    if not fixed:
        raise StabilizerViolationException(
            key="maps.errors.stabilizer_violation",
            fallback=f"{subgroup.describe()} does not fix the basis vector {a} of {module.name}",
        )


def theta_map(source: CohomologySpace, a: int, module: KGModule) -> CohomologyMap:
    """Функция построения θ_a*: Ĥⁿ(V, k) → Ĥⁿ(V, kG).

    Args:
        source: Группа со скалярными коэффициентами.
        a: Элемент G, базисный вектор модуля перестановок.
        module: Модуль перестановок kG.

    Returns:
        Отображение, индуцированное r ↦ r·e_a.

    Raises:
        StabilizerViolationException: V не стабилизирует a.
    """
    _check_stabilizer(module, source.subgroup, a)
    target = _space(source, module=module)
    return _induced(
        source,
        target,
        lambda cochain: theta_cochain(source.complex, target.complex, source.degree, cochain, a),
        f"{Provenance.THETA}({a})",
    )


def pi_map(source: CohomologySpace, a: int, trivial: KGModule) -> CohomologyMap:
    """Функция построения π_a*: Ĥⁿ(V, kG) → Ĥⁿ(V, k), координата при e_a.

    Raises:
        StabilizerViolationException: V не стабилизирует a.
    """
    _check_stabilizer(source.module, source.subgroup, a)
    target = _space(source, module=trivial)
    return _induced(
        source,
        target,
        lambda cochain: pi_cochain(source.complex, target.complex, source.degree, cochain, a),
        f"{Provenance.PI}({a})",
    )


def restriction(cls: CohomologyClass, subgroup: Subgroup) -> CohomologyClass:
    return restriction_map(cls.space, subgroup).apply(cls)


def corestriction(cls: CohomologyClass, ambient: Subgroup) -> CohomologyClass:
    return corestriction_map(cls.space, ambient).apply(cls)


def conjugation(g: int, cls: CohomologyClass) -> CohomologyClass:
    return conjugation_map(cls.space, g).apply(cls)


def theta_push(a: int, cls: CohomologyClass, module: KGModule) -> CohomologyClass:
    return theta_map(cls.space, a, module).apply(cls)


def pi_push(a: int, cls: CohomologyClass, trivial: KGModule) -> CohomologyClass:
    return pi_map(cls.space, a, trivial).apply(cls)

