from dataclasses import dataclass

import numpy as np

from .exceptions import NotASubgroupException
from .finite_group import FiniteGroup, Subgroup


@dataclass(slots=True, frozen=True)
class ConjugacyClass:
    """Класс сопряжённости.

    Attributes:
        rep: Представитель наименьшего индекса.
        members: Элементы класса.
        centralizer: Централизатор представителя.
    """

    rep: int
    members: tuple[int, ...]
    centralizer: Subgroup


@dataclass(slots=True, frozen=True, eq=False)
class RightTransversal:
    """Разложение группы на правые смежные классы Vc.

    Attributes:
        subgroup: Подгруппа V.
        reps: Представители правых смежных классов (наименьший индекс в классе).
        coset_of: Для каждого g номер класса c с g ∈ Vc.
        factor: Для каждого g элемент v ∈ V с g = v·c.
    """

    subgroup: Subgroup
    reps: tuple[int, ...]
    coset_of: np.ndarray
    factor: np.ndarray

    @property
    def size(self) -> int:
        return len(self.reps)

    def decompose(self, g: int) -> tuple[int, int]:
        """Разложение g = v·c.

        Returns:
            Пара (v, номер представителя c).
        """
        return int(self.factor[g]), int(self.coset_of[g])


def _check_contained(ambient: Subgroup, sub: Subgroup) -> None:
    if not sub.is_subgroup_of(ambient):
        raise NotASubgroupException(
            key="groups.errors.not_contained",
            fallback=f"{sub.describe()} is not contained in {ambient.describe()}",
        )


def coset_reps(ambient: Subgroup | FiniteGroup, sub: Subgroup) -> list[int]:
    """Функция выбора представителей левых смежных классов gH.

    Args:
        ambient: Объемлющая группа или подгруппа.
        sub: Подгруппа H.

    Returns:
        [ambient : H] представителей, наименьший индекс в каждом классе, по возрастанию.
    """
    if isinstance(ambient, FiniteGroup):
        ambient = ambient.whole()
    _check_contained(ambient, sub)
    table = sub.parent.table
    members = np.array(sub.members, dtype=np.int64)
    covered: set[int] = set()
    reps: list[int] = []
    for g in ambient.members:
        if g in covered:
            continue
        reps.append(g)
        covered.update(int(x) for x in table[g, members])
    return reps


def right_transversal(sub: Subgroup) -> RightTransversal:
    """Функция разложения всей группы на правые смежные классы подгруппы.

    Args:
        sub: Подгруппа V.

    Returns:
        Трансверсаль с разложениями g = v·c для всех g.
    """
    group = sub.parent
    n = group.order
    coset_of = np.full(n, -1, dtype=np.int64)
    factor = np.zeros(n, dtype=np.int64)
    reps: list[int] = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        index = len(reps)
        reps.append(g)
        for v in sub.members:
            element = group.mul(v, g)
            coset_of[element] = index
            factor[element] = v
    coset_of.setflags(write=False)
    factor.setflags(write=False)
    return RightTransversal(subgroup=sub, reps=tuple(reps), coset_of=coset_of, factor=factor)


def double_coset_reps(left: Subgroup, right: Subgroup, ambient: Subgroup | None = None) -> list[int]:
    """Функция выбора представителей двойных смежных классов HxK.

    Args:
        left: Подгруппа H.
        right: Подгруппа K.
        ambient: Объемлющая подгруппа (по умолчанию вся группа).

    Returns:
        Представители наименьшего индекса, по возрастанию.
    """
    group = left.parent
    ambient = ambient or group.whole()
    _check_contained(ambient, left)
    _check_contained(ambient, right)
    table = group.table
    left_members = np.array(left.members, dtype=np.int64)
    right_members = np.array(right.members, dtype=np.int64)
    covered: set[int] = set()
    reps: list[int] = []
    for g in ambient.members:
        if g in covered:
            continue
        reps.append(g)
        coset = table[table[left_members, g][:, None], right_members[None, :]]
        covered.update(int(x) for x in coset.reshape(-1))
    return reps


def double_coset(left: Subgroup, x: int, right: Subgroup) -> frozenset[int]:
    """Элементы двойного смежного класса HxK."""
    group = left.parent
    return frozenset(group.mul(group.mul(h, x), k) for h in left.members for k in right.members)


def centralizer(group: FiniteGroup, g: int) -> Subgroup:
    return group.subgroup(h for h in range(group.order) if group.mul(h, g) == group.mul(g, h))


def conjugacy_data(group: FiniteGroup) -> list[ConjugacyClass]:
    """Функция вычисления классов сопряжённости с централизаторами представителей.

    Args:
        group: Конечная группа.

    Returns:
        Классы в порядке возрастания представителей.
    """
    seen: set[int] = set()
    classes: list[ConjugacyClass] = []
    for g in range(group.order):
        if g in seen:
            continue
        members = tuple(sorted({group.conj(h, g) for h in range(group.order)}))
        seen.update(members)
        classes.append(ConjugacyClass(rep=g, members=members, centralizer=centralizer(group, g)))
    return classes
