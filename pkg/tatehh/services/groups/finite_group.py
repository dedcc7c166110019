import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    GeneratorClosureException,
    GroupTooLargeException,
    InvalidGroupSpecException,
    NotASubgroupException,
)
from .types import Members, Permutation
from .validators import GroupValidators
from ...config import GENERATOR_CLOSURE_BOUND, MAX_GROUP_ORDER
from ...schemas import GroupSpecSchema

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True, eq=False)
class FiniteGroup:
    """Конечная группа, заданная таблицей Кэли.

    Элементы занумерованы 0..n-1, единица имеет индекс 0.

    Attributes:
        name: Имя группы.
        table: Таблица умножения, table[a, b] = индекс произведения a·b.
        inverse: Индексы обратных элементов.
        labels: Подписи элементов для отчётов.
    """

    name: str
    table: np.ndarray
    inverse: np.ndarray = field(init=False)
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=np.int64)
        GroupValidators.validate_table(table)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        n = table.shape[0]
        inverse = np.argmax(table == 0, axis=1).astype(np.int64)
        inverse.setflags(write=False)
        object.__setattr__(self, "inverse", inverse)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"g{index}" for index in range(n)))
        elif len(self.labels) != n:
            raise InvalidGroupSpecException(
                key="groups.errors.invalid_group_spec",
                fallback=f"Expected {n} element labels, got {len(self.labels)}",
            )

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def product(self, elements: Iterable[int]) -> int:
        result = 0
        for element in elements:
            result = int(self.table[result, element])
        return result

    def conj(self, g: int, x: int) -> int:
        """Сопряжение ^g x = g·x·g⁻¹."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def power(self, g: int, exponent: int) -> int:
        base = g if exponent >= 0 else self.inv(g)
        result = 0
        for _ in range(abs(exponent)):
            result = int(self.table[result, base])
        return result

    def element_order(self, g: int) -> int:
        order, current = 1, g
        while current != 0:
            current = int(self.table[current, g])
            order += 1
        return order

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def cyclic_generator(self) -> int | None:
        """Метод поиска порождающего циклической группы.

        Returns:
            Элемент наименьшего индекса порядка |G| или None, если группа не циклическая.
        """
        for g in range(self.order):
            if self.element_order(g) == self.order:
                return g
        return None

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(int(m) for m in members))))

    def generated_subgroup(self, generators: Iterable[int]) -> "Subgroup":
        """Метод построения подгруппы, порождённой элементами.

        Args:
            generators: Порождающие.

        Returns:
            Наименьшая подгруппа, содержащая порождающие.
        """
        members = {0}
        frontier = deque([0])
        gens = [int(g) for g in generators]
        while frontier:
            current = frontier.popleft()
            for g in gens:
                nxt = int(self.table[current, g])
                if nxt not in members:
                    members.add(nxt)
                    frontier.append(nxt)
        return self.subgroup(members)

    def label(self, g: int) -> str:
        return self.labels[g]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(slots=True, frozen=True, eq=False)
class Subgroup:
    """Подгруппа конечной группы.

    Attributes:
        parent: Объемлющая группа.
        members: Отсортированные индексы элементов.
    """

    parent: FiniteGroup
    members: Members

    def __post_init__(self) -> None:
        members = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", members)
        if not members or members[0] != 0:
            raise NotASubgroupException(
                key="groups.errors.not_a_subgroup",
                fallback="Subgroup must contain the identity",
            )
        index = np.array(members, dtype=np.int64)
        if index.max() >= self.parent.order:
            raise NotASubgroupException(
                key="groups.errors.not_a_subgroup",
                fallback="Subgroup members exceed the group order",
            )
        products = self.parent.table[np.ix_(index, index)]
        if not np.isin(products, index).all():
            raise NotASubgroupException(
                key="groups.errors.not_a_subgroup",
                fallback=f"Set {members} is not closed under the group product",
            )

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, g: int) -> bool:
        return g in self._member_set()

    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return other.parent is self.parent and self._member_set() <= other._member_set()

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    def conjugate(self, g: int) -> "Subgroup":
        """Сопряжённая подгруппа ^gH = gHg⁻¹."""
        return Subgroup(self.parent, tuple(self.parent.conj(g, h) for h in self.members))

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, tuple(sorted(self._member_set() & other._member_set())))

    def as_group(self) -> FiniteGroup:
        """Метод представления подгруппы самостоятельной группой.

        Элемент с индексом i новой группы соответствует members[i] объемлющей группы.

        Returns:
            Переиндексированная группа.
        """
        position = {g: i for i, g in enumerate(self.members)}
        index = np.array(self.members, dtype=np.int64)
        table = np.vectorize(position.__getitem__)(self.parent.table[np.ix_(index, index)])
        return FiniteGroup(
            name=f"{self.parent.name}[{','.join(self.parent.label(g) for g in self.members)}]",
            table=table,
            labels=tuple(self.parent.label(g) for g in self.members),
        )

    def describe(self) -> str:
        return "{" + ", ".join(self.parent.label(g) for g in self.members) + "}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.name}, {self.members})"


def _compose(left: Permutation, right: Permutation) -> Permutation:
    """Произведение перестановок (σ·τ)(i) = σ(τ(i))."""
    return tuple(left[i] for i in right)


def close_permutations(generators: Sequence[Permutation], bound: int = GENERATOR_CLOSURE_BOUND) -> list[Permutation]:
    """Функция замыкания множества порождающих перестановок.

    Обход в ширину с умножением справа на порождающие в их порядке; единица первая.

    Args:
        generators: Перестановки в однострочной записи образов.
        bound: Максимальный допустимый порядок.

    Returns:
        Элементы группы в порядке обнаружения.

    Raises:
        InvalidGroupSpecException: Если порождающие не являются перестановками одной степени.
        GeneratorClosureException: Если группа не замыкается в пределах bound.
    """
    if not generators:
        raise InvalidGroupSpecException(
            key="groups.errors.invalid_group_spec",
            fallback="At least one permutation generator is required",
        )
    degree = len(generators[0])
    for generator in generators:
        if len(generator) != degree or sorted(generator) != list(range(degree)):
            raise InvalidGroupSpecException(
                key="groups.errors.invalid_group_spec",
                fallback=f"Generator {list(generator)} is not a permutation of 0..{degree - 1}",
            )

    identity: Permutation = tuple(range(degree))
    elements: list[Permutation] = [identity]
    seen: set[Permutation] = {identity}
    position = 0
    while position < len(elements):
        current = elements[position]
        for generator in generators:
            candidate = _compose(current, tuple(generator))
            if candidate not in seen:
                seen.add(candidate)
                elements.append(candidate)
                if len(elements) > bound:
                    raise GeneratorClosureException(
                        key="groups.errors.generator_closure",
                        fallback=f"Generators do not close within {bound} elements",
                        translation_params={"bound": bound},
                    )
        position += 1
    return elements


def group_from_permutations(
    name: str, generators: Sequence[Sequence[int]], labels: Sequence[str] = ()
) -> FiniteGroup:
    """Функция построения группы по порождающим перестановкам.

    Args:
        name: Имя группы.
        generators: Порождающие перестановки.
        labels: Подписи элементов (по умолчанию однострочная запись образов).

    Returns:
        Группа с таблицей Кэли.
    """
    elements = close_permutations([tuple(int(i) for i in g) for g in generators])
    index = {element: i for i, element in enumerate(elements)}
    table = [[index[_compose(a, b)] for b in elements] for a in elements]
    if not labels:
        labels = tuple("[" + ",".join(str(i) for i in element) + "]" for element in elements)
    return FiniteGroup(name=name, table=np.array(table, dtype=np.int64), labels=tuple(labels))


def group_from_table(name: str, table: Sequence[Sequence[int]], labels: Sequence[str] = ()) -> FiniteGroup:
    """Функция построения группы по таблице Кэли с переносом единицы в индекс 0.

    Args:
        name: Имя группы.
        table: Таблица умножения.
        labels: Подписи элементов в исходной нумерации.

    Returns:
        Каноническая группа.
    """
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise InvalidGroupSpecException(
            key="groups.errors.invalid_group_spec",
            fallback=f"Cayley table is not a rectangular integer array: {e}",
        ) from e
    GroupValidators.validate_square(array)
    GroupValidators.validate_latin_square(array)
    n = array.shape[0]
    identities = [e for e in range(n) if np.array_equal(array[e], np.arange(n))]
    if not identities:
        raise InvalidGroupSpecException(
            key="groups.errors.invalid_group_spec",
            fallback="Cayley table has no identity row",
        )
    identity = identities[0]
    order = [identity] + [g for g in range(n) if g != identity]
    position = np.empty(n, dtype=np.int64)
    position[order] = np.arange(n)
    relabeled = position[array[np.ix_(order, order)]]
    new_labels = tuple(labels[g] for g in order) if labels else tuple(str(g) for g in order)
    return FiniteGroup(name=name, table=relabeled, labels=new_labels)


def build_group(spec: GroupSpecSchema) -> FiniteGroup:
    """Функция построения группы по описанию.

    Args:
        spec: Описание группы (таблица Кэли или порождающие перестановки).

    Returns:
        Каноническая группа с единицей в индексе 0.

    Raises:
        InvalidGroupSpecException: Если заявленный порядок не совпадает с фактическим.
        GroupTooLargeException: Если порядок превышает MAX_GROUP_ORDER.
    """
    if spec.order > MAX_GROUP_ORDER:
        raise GroupTooLargeException(
            key="groups.errors.group_too_large",
            fallback=f"Group order {spec.order} exceeds the limit {MAX_GROUP_ORDER}",
            translation_params={"order": spec.order, "limit": MAX_GROUP_ORDER},
        )
    if spec.cayley_table is not None:
        group = group_from_table(spec.name, spec.cayley_table)
    else:
        group = group_from_permutations(spec.name, spec.perm_generators)
    if group.order != spec.order:
        raise InvalidGroupSpecException(
            key="groups.errors.order_mismatch",
            fallback=f"Declared order {spec.order} differs from the actual order {group.order}",
            translation_params={"declared": spec.order, "actual": group.order},
        )
    logger.debug(f"Built group {group.name} of order {group.order}")
    return group
