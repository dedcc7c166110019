from itertools import combinations_with_replacement

from .constants import LATTICE_GENERATOR_COUNT
from ..groups import FiniteGroup, Subgroup


def subgroup_lattice(group: FiniteGroup, generators: int = LATTICE_GENERATOR_COUNT) -> list[Subgroup]:
    """Функция перечисления подгрупп, порождённых не более чем generators элементами.

    Для групп из встроенной библиотеки это вся решётка подгрупп.

    Args:
        group: Конечная группа.
        generators: Наибольшее число порождающих.

    Returns:
        Подгруппы по возрастанию порядка, затем по составу.
    """
    found: set[Subgroup] = set()
    for count in range(generators + 1):
        for elements in combinations_with_replacement(range(group.order), count):
            found.add(group.generated_subgroup(elements))
    return sorted(found, key=lambda subgroup: (subgroup.order, subgroup.members))


def is_normal(subgroup: Subgroup) -> bool:
    return all(subgroup.conjugate(g) == subgroup for g in range(subgroup.parent.order))
