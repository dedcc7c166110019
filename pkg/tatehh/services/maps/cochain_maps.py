"""Отображения на уровне коцепей.

Все операции проходят через значения коцепи на развёрнутом базисе h·b_t (CochainComplex.expand) и затем
ограничиваются на представителей смежных классов подгруппы-цели.
"""

import numpy as np

from ..groups import coset_reps
from ..kgmodules import KGModule
from ..linalg import mat_mul
from ..resolutions import CochainComplex
from ..types import Degree, Vector


def translate_expanded(module: KGModule, expanded: np.ndarray, g: int) -> np.ndarray:
    """Значения x ↦ g·f(g⁻¹x) на развёрнутом базисе.

    Args:
        module: Модуль коэффициентов.
        expanded: Значения f, матрица dim M × (ранг·|G|).
        g: Элемент группы.

    Returns:
        Значения сдвинутой коцепи в том же формате.
    """
    group = module.group
    blocks = expanded.reshape(module.dim, -1, group.order)[:, :, group.table[group.inverse[g]]]
    return mat_mul(module.action[g], blocks.reshape(module.dim, -1), module.p)


def restrict_cochain(source: CochainComplex, target: CochainComplex, n: Degree, cochain: Vector) -> Vector:
    """Ограничение Hom_{kV}(X, M) ⊂ Hom_{kV'}(X, M): представитель не меняется."""
    return target.restrict_expanded(n, source.expand(n, cochain))


def corestrict_cochain(source: CochainComplex, target: CochainComplex, n: Degree, cochain: Vector) -> Vector:
    """Функция коограничения (cor f)(x) = Σ g·f(g⁻¹x) по представителям левых классов gV' в V.

    Args:
        source: Комплекс над меньшей подгруппой V'.
        target: Комплекс над V ⊇ V'.
        n: Степень.
        cochain: Коцепь над V'.

    Returns:
        Коцепь над V.
    """
    module = source.module
    expanded = source.expand(n, cochain)
    total = np.zeros_like(expanded)
    for g in coset_reps(target.subgroup, source.subgroup):
        total = np.mod(total + translate_expanded(module, expanded, g), module.p)
    return target.restrict_expanded(n, total)


def conjugate_cochain(source: CochainComplex, target: CochainComplex, n: Degree, cochain: Vector, g: int) -> Vector:
    """Сопряжение (g*f)(x) = g·f(g⁻¹x), коцепь над ^gV."""
    return target.restrict_expanded(n, translate_expanded(source.module, source.expand(n, cochain), g))


def theta_cochain(source: CochainComplex, target: CochainComplex, n: Degree, cochain: Vector, a: int) -> Vector:
    """Композиция скалярной коцепи с θ_a: k → kG, r ↦ r·e_a."""
    values = source.values(n, cochain)
    pushed = np.zeros((*values.shape[:2], target.module.dim), dtype=np.int64)
    pushed[:, :, a] = values[:, :, 0]
    return pushed.reshape(-1)


def pi_cochain(source: CochainComplex, target: CochainComplex, n: Degree, cochain: Vector, a: int) -> Vector:
    """Композиция коцепи со значениями в kG с координатой π_a."""
    return source.values(n, cochain)[:, :, a].reshape(-1).copy()
