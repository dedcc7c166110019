"""Обычные когомологии и гомологии по нормализованной стандартной резольвенте.

Коцепи степени k суть функции (G∖{1})^k → M; комплекс не зависит от реализаций полной резольвенты и служит
независимой проверкой её неотрицательной и отрицательной частей.
"""

import logging

import numpy as np

from .validators import ResolutionsValidators
from ..kgmodules import KGModule
from ..linalg import FpMatrix, kernel_basis, rank
from ..types import Degree

logger = logging.getLogger(__name__)


def _digits(base: int, length: int) -> np.ndarray:
    powers = base ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (np.arange(base**length, dtype=np.int64)[:, None] // powers[None, :]) % base


def _faces(module: KGModule, length: int, homological: bool) -> FpMatrix:
    """Метод построения матрицы (ко)граничного отображения между кортежами длин length и length - 1.

    Строки матрицы индексированы кортежами длины length - 1 (гомологии) или length (когомологии).

    Args:
        module: Модуль коэффициентов.
        length: Длина старшего кортежа.
        homological: Гомологическое направление (m·g = ρ(g⁻¹)m) вместо когомологического.

    Returns:
        ∂_length при homological, иначе δ^{length-1}.
    """
    group, p, dim = module.group, module.p, module.dim
    base = group.order - 1
    digits = _digits(base, length)
    elements = digits + 1
    longer = base**length
    shorter = base ** (length - 1)
    powers = base ** np.arange(length - 2, -1, -1, dtype=np.int64)
    block = np.zeros((longer, dim, shorter, dim), dtype=np.int64)
    identity = np.eye(dim, dtype=np.int64)

    def put(tuples: np.ndarray, faces: np.ndarray, values: np.ndarray) -> None:
        np.add.at(block, (tuples, slice(None), faces, slice(None)), values)

    first = elements[:, 0]
    if homological:
        action = np.transpose(module.action[group.inverse[first]], (0, 2, 1))
    else:
        action = module.action[first]
    put(np.arange(longer), digits[:, 1:] @ powers, action)
    for i in range(1, length):
        merged = group.table[elements[:, i - 1], elements[:, i]]
        keep = np.flatnonzero(merged != 0)
        faced = np.concatenate([digits[keep, : i - 1], merged[keep, None] - 1, digits[keep, i + 1 :]], axis=1)
        sign = -1 if i % 2 else 1
        put(keep, faced @ powers, np.broadcast_to(sign * identity, (keep.size, dim, dim)))
    sign = -1 if length % 2 else 1
    put(np.arange(longer), digits[:, :-1] @ powers, np.broadcast_to(sign * identity, (longer, dim, dim)))
    matrix = FpMatrix(p, block.reshape(longer * dim, shorter * dim))
    return matrix.T if homological else matrix


def ordinary_cohomology(module: KGModule, n: Degree) -> int:
    """Функция вычисления dim Hⁿ(G, M) по нормализованной стандартной резольвенте.

    Args:
        module: Модуль M над kG.
        n: Степень n ≥ 0.

    Returns:
        dim ker δⁿ - rank δⁿ⁻¹.
    """
    base = module.group.order - 1
    ResolutionsValidators.validate_size(base ** (n + 1) * module.dim, f"Normalized cochains of degree {n + 1}")
    cocycles = kernel_basis(_faces(module, n + 1, homological=False)).cols
    boundaries = rank(_faces(module, n, homological=False)) if n > 0 else 0
    logger.debug(f"H^{n}({module.group.name}, {module.name}) has dimension {cocycles - boundaries}")
    return cocycles - boundaries


def ordinary_homology(module: KGModule, n: Degree) -> int:
    """Функция вычисления dim Hₙ(G, M) для комплекса M ⊗_{kG} нормализованной стандартной резольвенты.

    Args:
        module: Модуль M над kG (правое действие m·g = ρ(g⁻¹)m).
        n: Степень n ≥ 0.

    Returns:
        dim Cₙ - rank ∂ₙ - rank ∂ₙ₊₁.
    """
    base = module.group.order - 1
    ResolutionsValidators.validate_size(base ** (n + 1) * module.dim, f"Normalized chains of degree {n + 1}")
    chains = base**n * module.dim
    outgoing = rank(_faces(module, n, homological=True)) if n > 0 else 0
    incoming = rank(_faces(module, n + 1, homological=True))
    logger.debug(f"H_{n}({module.group.name}, {module.name}) has dimension {chains - outgoing - incoming}")
    return chains - outgoing - incoming
