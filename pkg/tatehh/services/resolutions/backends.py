"""Построение полных резольвент k над kG.

Неотрицательная часть строится выбранной реализацией, отрицательная часть получается дуализацией:
X_{-m} = Hom_{kG}(X_{m-1}, kG) с двойственным базисом, d_{-m} = d_m^*, а d_0 = η∘ε склеивает половины.
"""

import logging

import numpy as np

from .complete import CompleteResolution
from .exceptions import BackendUnavailableException
from .free_maps import FreeMap
from .types import Backend
from .validators import ResolutionsValidators
from ..groups import FiniteGroup
from ..linalg import FpMatrix, image_basis, in_span, kernel_basis
from ..types import Degree, Prime, Window
from ..validators import validate_prime
from ...config import DEFAULT_WINDOW

logger = logging.getLogger(__name__)


def default_window(largest_degree: int = DEFAULT_WINDOW) -> Window:
    """Окно [-(W+1), W+1], в котором у каждой степени |n| ≤ W есть соседи."""
    return -(largest_degree + 1), largest_degree + 1


def _positive_extent(window: Window) -> Degree:
    lo, hi = window
    return max(hi, -lo - 1)


def _splice(group: FiniteGroup) -> FreeMap:
    n = group.order
    terms = np.stack([np.zeros(n), np.zeros(n), np.arange(n), np.ones(n)], axis=1)
    return FreeMap(source_rank=1, target_rank=1, terms=terms)


def _assemble(
    group: FiniteGroup,
    p: Prime,
    window: Window,
    positive: dict[Degree, FreeMap],
    ranks: dict[Degree, int],
    backend: Backend,
    labels: dict[Degree, tuple[str, ...]] | None = None,
) -> CompleteResolution:
    """Метод склейки неотрицательной части с двойственной.

    Args:
        group: Группа.
        p: Характеристика.
        window: Окно.
        positive: Дифференциалы d_1, ..., d_P.
        ranks: Ранги X_0, ..., X_P.
        backend: Реализация.
        labels: Подписи базисов неотрицательных членов.

    Returns:
        Полная резольвента в окне.
    """
    lo, hi = window
    all_ranks = {n: ranks[n] if n >= 0 else ranks[-n - 1] for n in range(lo, hi + 1)}
    differentials: dict[Degree, FreeMap] = {}
    for n in range(lo + 1, hi + 1):
        if n > 0:
            differentials[n] = positive[n]
        elif n == 0:
            differentials[n] = _splice(group)
        else:
            differentials[n] = positive[-n].dual(group)
    all_labels: dict[Degree, tuple[str, ...]] = {}
    for n in range(lo, hi + 1):
        source = labels.get(n if n >= 0 else -n - 1) if labels else None
        if source is not None:
            all_labels[n] = source if n >= 0 else tuple(f"{label}*" for label in source)
    return CompleteResolution(
        group=group,
        p=p,
        window=window,
        ranks=all_ranks,
        differentials=differentials,
        backend=backend,
        basis_labels=all_labels,
    )


def _tuple_digits(order: int, length: int) -> np.ndarray:
    count = order**length
    powers = order ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (np.arange(count, dtype=np.int64)[:, None] // powers[None, :]) % order


def _bar_differential(group: FiniteGroup, length: int) -> FreeMap:
    """Метод построения дифференциала стандартной резольвенты на кортежах длины length.

    d[g_1|...|g_n] = g_1[g_2|...|g_n] + Σ (-1)^i [...|g_i g_{i+1}|...] + (-1)^n [g_1|...|g_{n-1}].
    """
    order = group.order
    digits = _tuple_digits(order, length)
    sources = np.arange(order**length, dtype=np.int64)
    powers = order ** np.arange(length - 2, -1, -1, dtype=np.int64)
    blocks = [np.stack([sources, sources % order ** (length - 1), digits[:, 0], np.ones_like(sources)], axis=1)]
    for i in range(1, length):
        merged = group.table[digits[:, i - 1], digits[:, i]]
        faced = np.concatenate([digits[:, : i - 1], merged[:, None], digits[:, i + 1 :]], axis=1)
        coefficient = -1 if i % 2 else 1
        blocks.append(
            np.stack([sources, faced @ powers, np.zeros_like(sources), np.full_like(sources, coefficient)], axis=1)
        )
    last = -1 if length % 2 else 1
    blocks.append(np.stack([sources, sources // order, np.zeros_like(sources), np.full_like(sources, last)], axis=1))
    return FreeMap(source_rank=order**length, target_rank=order ** (length - 1), terms=np.concatenate(blocks))


def standard_complete_resolution(group: FiniteGroup, p: Prime, window: Window) -> CompleteResolution:
    """Функция построения полной резольвенты по ненормализованной стандартной резольвенте.

    X_n при n ≥ 0 свободен на кортежах [g_1|...|g_n] ранга |G|^n.

    Args:
        group: Группа G.
        p: Характеристика.
        window: Окно, содержащее [-1, 1].

    Returns:
        Полная резольвента.

    Raises:
        ResolutionTooLargeException: Размерность члена превышает бюджет.
    """
    validate_prime(p)
    ResolutionsValidators.validate_window(window)
    order = group.order
    extent = _positive_extent(window)
    ResolutionsValidators.validate_size(order ** (extent + 1), f"Bar term of degree {extent} for {group.name}")
    ranks = {n: order**n for n in range(extent + 1)}
    positive = {n: _bar_differential(group, n) for n in range(1, extent + 1)}
    labels: dict[Degree, tuple[str, ...]] = {}
    for n in range(extent + 1):
        labels[n] = tuple("[" + "|".join(group.label(int(g)) for g in row) + "]" for row in _tuple_digits(order, n))
    logger.debug(f"Bar resolution of {group.name} built up to degree {extent}")
    return _assemble(group, p, window, positive, ranks, Backend.GENERIC, labels)


def _translates(group: FiniteGroup, vector: np.ndarray) -> np.ndarray:
    """Столбцы h·v для всех h ∈ G в развёрнутом базисе свободного модуля."""
    n = group.order
    blocks = vector.reshape(-1, n)
    result = np.zeros((vector.size, n), dtype=np.int64)
    for h in range(n):
        moved = np.zeros_like(blocks)
        moved[:, group.table[h]] = blocks
        result[:, h] = moved.reshape(-1)
    return result


def _kg_generators(group: FiniteGroup, p: Prime, kernel: FpMatrix) -> list[np.ndarray]:
    """Метод жадного выбора kG-порождающих подмодуля из базиса ядра.

    Вектор берётся, если он не лежит в kG-оболочке уже выбранных.

    Args:
        group: Группа.
        p: Характеристика.
        kernel: Базис подмодуля над k.

    Returns:
        Выбранные порождающие.
    """
    chosen: list[np.ndarray] = []
    spanned = FpMatrix.zeros(p, kernel.rows, 0)
    for index in range(kernel.cols):
        if spanned.cols == kernel.cols:
            break
        vector = kernel.data[:, index]
        if spanned.cols and in_span(spanned, vector):
            continue
        chosen.append(vector)
        spanned = image_basis(FpMatrix(p, np.concatenate([spanned.data, _translates(group, vector)], axis=1)))
    return chosen


def reduced_complete_resolution(group: FiniteGroup, p: Prime, window: Window) -> CompleteResolution:
    """Функция построения полной резольвенты жадным выбором порождающих ядер.

    X_0 = kG с аугментацией; X_{n+1} свободен на порождающих ker d_n, d_{n+1} переводит их в порождающие.

    Args:
        group: Группа G.
        p: Характеристика.
        window: Окно, содержащее [-1, 1].

    Returns:
        Полная резольвента.

    Raises:
        ResolutionTooLargeException: Размерность члена превышает бюджет.
    """
    validate_prime(p)
    ResolutionsValidators.validate_window(window)
    order = group.order
    extent = _positive_extent(window)
    ranks = {0: 1}
    positive: dict[Degree, FreeMap] = {}
    previous = FpMatrix(p, np.ones((1, order), dtype=np.int64))
    for n in range(1, extent + 1):
        generators = _kg_generators(group, p, kernel_basis(previous))
        images = np.stack(generators, axis=1)
        ResolutionsValidators.validate_size(len(generators) * order, f"Reduced term of degree {n} for {group.name}")
        positive[n] = FreeMap.from_images(group, images, target_rank=ranks[n - 1])
        ranks[n] = len(generators)
        previous = positive[n].expanded(group, p)
        logger.debug(f"Reduced resolution of {group.name}: rank of X_{n} is {ranks[n]}")
    return _assemble(group, p, window, positive, ranks, Backend.REDUCED)


def cyclic_periodic_resolution(group: FiniteGroup, p: Prime, window: Window) -> CompleteResolution:
    """Функция построения 2-периодической полной резольвенты циклической группы.

    Все X_n имеют ранг 1; d_n есть умножение на a - 1 при нечётном n и на норму Σ a^i при чётном.

    Args:
        group: Циклическая группа порядка m с p | m.
        p: Характеристика.
        window: Окно, содержащее [-1, 1].

    Returns:
        Полная резольвента.

    Raises:
        BackendUnavailableException: Группа не циклическая или p не делит её порядок.
    """
    validate_prime(p)
    ResolutionsValidators.validate_window(window)
    generator = group.cyclic_generator()
    if generator is None or group.order % p:
        raise BackendUnavailableException(
            key="resolutions.errors.backend_unavailable",
            fallback=(
                f"Periodic resolution needs a cyclic group of order divisible by {p}, got {group.name}; "
                "Tate cohomology vanishes when p does not divide the order"
            ),
            translation_params={"backend": Backend.CYCLIC, "group": group.name},
        )
    order = group.order
    odd = FreeMap(source_rank=1, target_rank=1, terms=[[0, 0, generator, 1], [0, 0, 0, -1]])
    powers = [group.power(generator, i) for i in range(order)]
    even = FreeMap(source_rank=1, target_rank=1, terms=[[0, 0, g, 1] for g in powers])
    lo, hi = window
    differentials = {n: odd if n % 2 else even for n in range(lo + 1, hi + 1)}
    return CompleteResolution(
        group=group,
        p=p,
        window=window,
        ranks={n: 1 for n in range(lo, hi + 1)},
        differentials=differentials,
        backend=Backend.CYCLIC,
        basis_labels={n: (f"b{n}",) for n in range(lo, hi + 1)},
    )


def select_backend(group: FiniteGroup, p: Prime, backend: Backend = Backend.AUTO) -> Backend:
    """Выбор реализации: auto даёт периодическую для циклических групп с p | |G|, иначе reduced."""
    if backend != Backend.AUTO:
        return Backend(backend)
    if group.cyclic_generator() is not None and group.order % p == 0:
        return Backend.CYCLIC
    return Backend.REDUCED


_BUILDERS = {
    Backend.GENERIC: standard_complete_resolution,
    Backend.REDUCED: reduced_complete_resolution,
    Backend.CYCLIC: cyclic_periodic_resolution,
}


def complete_resolution(
    group: FiniteGroup, p: Prime, window: Window, backend: Backend = Backend.AUTO
) -> CompleteResolution:
    """Функция построения полной резольвенты выбранной реализацией.

    Args:
        group: Группа G.
        p: Характеристика.
        window: Окно.
        backend: Реализация (auto, generic, reduced, cyclic).

    Returns:
        Полная резольвента.
    """
    chosen = select_backend(group, p, backend)
    logger.info(f"Building {chosen} complete resolution of {group.name} over F_{p} in window {window}")
    return _BUILDERS[chosen](group, p, window)
