"""Компоненты полного диагонального приближения Γ: X → X ⊗̂ X.

Компонента (r, s) хранится после проекции второго сомножителя на Ω_s = X_s / im d_{s+1}:
F_r = (1 ⊗ π)Γ_{r,s}: X_{r+s} → X_r ⊗ Ω_s. Коцикл степени s пропускается через π, а семейство F_• при
фиксированном s есть цепное отображение X_{•+s} → X_• ⊗ Ω_s с (ε ⊗ 1)F_0 = π.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DiagonalUnavailableException
from .types import DiagonalMethod
from ..kgmodules import KGModule, free_module, quotient
from ..linalg import Subquotient, mat_mul
from ..resolutions import Backend, CompleteResolution, act_on_tensor, chain_lift
from ..resolutions.types import LiftValues
from ..types import Degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SyzygyQuotient:
    """Фактор Ω_s = X_s / im d_{s+1} с проекцией π на развёрнутом базисе.

    Attributes:
        degree: Степень s.
        module: Модуль Ω_s.
        basis: Представители и проекция X_s → Ω_s.
    """

    degree: Degree
    module: KGModule
    basis: Subquotient

    def seed(self) -> np.ndarray:
        """Значения π на kG-базисе X_s, форма (ранг, dim Ω)."""
        order = self.module.group.order
        return self.basis.projection.data[:, ::order].T.copy()

    def descend(self, expanded: np.ndarray) -> np.ndarray:
        """Отображение ḡ: Ω_s → N коцикла g = ḡ∘π по его развёрнутым значениям (dim N × dim X_s)."""
        return mat_mul(expanded, self.basis.reps.data, self.module.p)


def syzygy_quotient(resolution: CompleteResolution, s: Degree) -> SyzygyQuotient:
    resolution.require(s, s + 1)

    def compute() -> SyzygyQuotient:
        free = free_module(resolution.group, resolution.p, resolution.rank(s))
        module, basis = quotient(free, resolution.expanded(s + 1))
        return SyzygyQuotient(degree=s, module=module, basis=basis)

    return resolution.cached(("syzygy", s), compute)


@dataclass(frozen=True, eq=False)
class DiagonalComponent:
    """Компонента F_r = (1 ⊗ π)Γ_{r,s} диагонального приближения.

    Attributes:
        resolution: Полная резольвента X.
        r: Степень левого сомножителя.
        s: Степень правого сомножителя.
        method: Способ построения.
        quotient: Фактор Ω_s.
        values: Значения на kG-базисе X_{r+s}, форма (ранг X_{r+s}, dim X_r, dim Ω_s).
    """

    resolution: CompleteResolution
    r: Degree
    s: Degree
    method: DiagonalMethod
    quotient: SyzygyQuotient
    values: LiftValues

    @property
    def degree(self) -> Degree:
        return self.r + self.s

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Образ элемента X_{r+s} в развёрнутом базисе, матрица dim X_r × dim Ω_s."""
        order = self.resolution.group.order
        omega = self.quotient.module
        result = np.zeros(self.values.shape[1:], dtype=np.int64)
        for index in np.flatnonzero(vector):
            t, g = divmod(int(index), order)
            result = np.mod(result + int(vector[index]) * act_on_tensor(omega, g, self.values[t]), omega.p)
        return result

    def __repr__(self) -> str:
        return f"DiagonalComponent(({self.r}, {self.s}), {self.method}, {self.resolution.group.name})"


def _alexander_whitney(resolution: CompleteResolution, r: Degree, s: Degree, omega: SyzygyQuotient) -> LiftValues:
    """[g_1|...|g_n] ↦ [g_1|...|g_r] ⊗ g_1⋯g_r[g_{r+1}|...|g_n]."""
    group = resolution.group
    order = group.order
    count = order ** (r + s)
    indices = np.arange(count, dtype=np.int64)
    front, back = np.divmod(indices, order**s)
    product = np.zeros(count, dtype=np.int64)
    for i in range(r):
        product = group.table[product, (front // order ** (r - 1 - i)) % order]
    projection = omega.basis.projection.data
    values = np.zeros((count, resolution.dim(r), omega.module.dim), dtype=np.int64)
    values[indices, front * order] = projection[:, back * order + product].T
    return values


def _periodic(resolution: CompleteResolution, r: Degree, s: Degree, omega: SyzygyQuotient) -> LiftValues:
    """Явная диагональ 2-периодической резольвенты циклической группы с образующей T.

    Γ(b) = b ⊗ b при чётном r, b ⊗ Tb при нечётном r и чётном s, Σ_{i<j} T^i b ⊗ T^j b при нечётных r и s.
    """
    group = resolution.group
    generator = group.cyclic_generator()
    powers = [group.power(generator, i) for i in range(group.order)]
    projection = omega.basis.projection.data
    values = np.zeros((1, group.order, omega.module.dim), dtype=np.int64)
    if r % 2 == 0:
        values[0, 0] = projection[:, 0]
    elif s % 2 == 0:
        values[0, 0] = projection[:, generator]
    else:
        for i, left in enumerate(powers):
            for right in powers[i + 1 :]:
                values[0, left] += projection[:, right]
    return np.mod(values, resolution.p)


def _lifted(resolution: CompleteResolution, r: Degree, s: Degree, omega: SyzygyQuotient) -> LiftValues:
    lift = resolution.cached(
        ("diagonal-lift", s), lambda: chain_lift(resolution, resolution, s, omega.module, omega.seed())
    )
    return lift.value(r)


_BUILDERS = {
    DiagonalMethod.ALEXANDER_WHITNEY: _alexander_whitney,
    DiagonalMethod.PERIODIC: _periodic,
    DiagonalMethod.LIFTED: _lifted,
}


def select_method(
    resolution: CompleteResolution, r: Degree, s: Degree, method: DiagonalMethod | None = None
) -> DiagonalMethod:
    """Функция выбора способа построения компоненты (r, s).

    Без явного указания: явная формула для циклической резольвенты, Александер-Уитни для стандартной
    при r, s ≥ 0, подъём в остальных случаях.

    Raises:
        DiagonalUnavailableException: Явно выбранный способ неприменим.
    """
    bar_cell = resolution.backend == Backend.GENERIC and r >= 0 and s >= 0
    if method is None:
        if resolution.backend == Backend.CYCLIC:
            return DiagonalMethod.PERIODIC
        return DiagonalMethod.ALEXANDER_WHITNEY if bar_cell else DiagonalMethod.LIFTED
    available = {
        DiagonalMethod.ALEXANDER_WHITNEY: bar_cell,
        DiagonalMethod.PERIODIC: resolution.backend == Backend.CYCLIC,
        DiagonalMethod.LIFTED: True,
    }
    if not available[method]:
        raise DiagonalUnavailableException(
            key="cup.errors.diagonal_unavailable",
            fallback=f"Diagonal method {method} is not available for cell ({r}, {s}) of {resolution.backend}",
            translation_params={"method": method, "r": r, "s": s},
        )
    return method


def diagonal_component(
    resolution: CompleteResolution, r: Degree, s: Degree, method: DiagonalMethod | None = None
) -> DiagonalComponent:
    """Функция построения компоненты диагонали (r, s).

    Args:
        resolution: Полная резольвента.
        r: Степень левого сомножителя.
        s: Степень правого сомножителя.
        method: Способ построения (по умолчанию выбирается по резольвенте).

    Returns:
        Компонента, кэшированная в резольвенте.

    Raises:
        WindowExhaustedException: Степени r, s, r+s или s+1 вне окна.
        DiagonalUnavailableException: Явно выбранный способ неприменим.
        LiftInconsistentException: Система подъёма несовместна.
    """
    method = select_method(resolution, r, s, method)
    resolution.require(r, r + s)
    omega = syzygy_quotient(resolution, s)

    def compute() -> DiagonalComponent:
        values = _BUILDERS[method](resolution, r, s, omega)
        logger.debug(f"Diagonal component ({r}, {s}) of {resolution.group.name} built by {method}")
        return DiagonalComponent(resolution=resolution, r=r, s=s, method=method, quotient=omega, values=values)

    return resolution.cached(("diagonal", r, s, method), compute)
