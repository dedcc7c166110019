import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import (
    InvalidActionException,
    InvalidProductDatumException,
    ProductDatumInconsistentException,
)
from .finite_group import FiniteGroup, Subgroup
from ...config import ASSOCIATIVITY_CHECK_LIMIT, DEFAULT_SEED, SAMPLED_CHECKS

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True, eq=False)
class GroupAction:
    """Действие группы H на группе G автоморфизмами.

    Attributes:
        actor: Действующая группа H.
        target: Группа G.
        act: Массив (|H|, |G|), act[h, g] = индекс элемента ^h g.
    """

    actor: FiniteGroup
    target: FiniteGroup
    act: np.ndarray

    def __post_init__(self) -> None:
        act = np.array(self.act, dtype=np.int64)
        if act.shape != (self.actor.order, self.target.order):
            raise InvalidActionException(
                key="groups.errors.invalid_action",
                fallback=f"Action table has shape {act.shape}, expected {(self.actor.order, self.target.order)}",
            )
        act.setflags(write=False)
        object.__setattr__(self, "act", act)
        self._validate()

    def _validate(self) -> None:
        n = self.target.order
        identity_row = np.arange(n)
        if not np.array_equal(self.act[0], identity_row):
            raise InvalidActionException(
                key="groups.errors.invalid_action",
                fallback="The identity of the acting group must act trivially",
            )
        for h in range(self.actor.order):
            if not np.array_equal(np.sort(self.act[h]), identity_row):
                raise InvalidActionException(
                    key="groups.errors.invalid_action",
                    fallback=f"Element {self.actor.label(h)} does not act by a permutation",
                )
            # ^h(xy) = ^h x · ^h y
            image = self.act[h]
            table = self.target.table
            if not np.array_equal(image[table], table[image[:, None], image[None, :]]):
                raise InvalidActionException(
                    key="groups.errors.invalid_action",
                    fallback=f"Element {self.actor.label(h)} does not act by an automorphism",
                )
        m = self.actor.order
        if m <= ASSOCIATIVITY_CHECK_LIMIT:
            pairs = [(a, b) for a in range(m) for b in range(m)]
        else:
            rng = np.random.default_rng(DEFAULT_SEED)
            pairs = [tuple(int(v) for v in rng.integers(0, m, size=2)) for _ in range(SAMPLED_CHECKS)]
        for a, b in pairs:
            if not np.array_equal(self.act[self.actor.mul(a, b)], self.act[a][self.act[b]]):
                raise InvalidActionException(
                    key="groups.errors.invalid_action",
                    fallback=(
                        f"Action is not a homomorphism at ({self.actor.label(a)}, {self.actor.label(b)})"
                    ),
                )

    def apply(self, h: int, g: int) -> int:
        return int(self.act[h, g])

    def is_conjugation(self) -> bool:
        """Проверка, что действие является сопряжением G на себе."""
        if self.actor is not self.target:
            return False
        group = self.target
        return all(self.act[h, g] == group.conj(h, g) for h in range(group.order) for g in range(group.order))


@dataclass(slots=True, frozen=True)
class OrbitProductDatum:
    """Данные произведения орбит.

    Для орбит i, j и представителя x двойного смежного класса H_i\\H/H_j
    выполнено g_k = ^y g_i · ^{yx} g_j, V = ^{yx}H_j ∩ ^y H_i ⊆ H_k.

    Attributes:
        i: Индекс левой орбиты.
        j: Индекс правой орбиты.
        x: Представитель двойного смежного класса в H.
        k: Индекс орбиты произведения.
        y: Наименьший y ∈ H с указанным тождеством.
        subgroup: Подгруппа V.
    """

    i: int
    j: int
    x: int
    k: int
    y: int
    subgroup: Subgroup


def action_from_function(actor: FiniteGroup, target: FiniteGroup, act: Callable[[int, int], int]) -> GroupAction:
    table = [[act(h, g) for g in range(target.order)] for h in range(actor.order)]
    return GroupAction(actor=actor, target=target, act=np.array(table, dtype=np.int64))


def conjugation_action(group: FiniteGroup) -> GroupAction:
    """Действие G на себе сопряжением ^h g = hgh⁻¹."""
    table = group.table
    act = table[table, group.inverse[:, None]]
    return GroupAction(actor=group, target=group, act=act)


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
    act = np.tile(np.arange(target.order, dtype=np.int64), (actor.order, 1))
    return GroupAction(actor=actor, target=target, act=act)


def orbit_stabilizer(action: GroupAction, g: int) -> tuple[tuple[int, ...], Subgroup]:
    """Функция вычисления орбиты и стабилизатора элемента.

    Args:
        action: Действие H на G.
        g: Элемент G.

    Returns:
        Отсортированная орбита H·g и стабилизатор Stab_H(g).
    """
    images = action.act[:, g]
    orbit = tuple(sorted({int(v) for v in images}))
    stabilizer = action.actor.subgroup(np.flatnonzero(images == g))
    return orbit, stabilizer


def orbit_representatives(action: GroupAction) -> list[tuple[int, tuple[int, ...], Subgroup]]:
    """Функция выбора представителей орбит.

    Орбиты упорядочены по наименьшему элементу; представитель есть наименьший элемент орбиты,
    поэтому единица всегда представляет первую орбиту.

    Args:
        action: Действие H на G.

    Returns:
        Тройки (g_i, орбита, H_i = Stab_H(g_i)).
    """
    seen: set[int] = set()
    result: list[tuple[int, tuple[int, ...], Subgroup]] = []
    for g in range(action.target.order):
        if g in seen:
            continue
        orbit, stabilizer = orbit_stabilizer(action, g)
        seen.update(orbit)
        result.append((g, orbit, stabilizer))
    logger.debug(f"Action of {action.actor.name} on {action.target.name} has {len(result)} orbits")
    return result


def orbit_index(action: GroupAction, reps: list[int]) -> np.ndarray:
    """Номер орбиты каждого элемента G по списку представителей."""
    index = np.full(action.target.order, -1, dtype=np.int64)
    for position, rep in enumerate(reps):
        index[action.act[:, rep]] = position
    return index


def locate_product_datum(
    action: GroupAction,
    reps: list[int],
    stabilizers: list[Subgroup],
    i: int,
    j: int,
    x: int,
) -> OrbitProductDatum:
    """Функция вычисления данных произведения орбит.

    Произведение g_i · ^x g_j лежит в единственной орбите k; y есть наименьший элемент H,
    переводящий его в g_k.

    Args:
        action: Действие H на G.
        reps: Представители орбит g_0, g_1, ... (нумерация с нуля).
        stabilizers: Стабилизаторы H_i представителей.
        i: Индекс левой орбиты.
        j: Индекс правой орбиты.
        x: Элемент H.

    Returns:
        Данные произведения.

    Raises:
        InvalidProductDatumException: Если индексы вне диапазона или x не принадлежит H.
        ProductDatumInconsistentException: Если V не содержится в H_k.
    """
    actor, target = action.actor, action.target
    if not (0 <= i < len(reps) and 0 <= j < len(reps)) or len(stabilizers) != len(reps):
        raise InvalidProductDatumException(
            key="groups.errors.invalid_product_datum",
            fallback=f"Orbit indices ({i}, {j}) are out of range for {len(reps)} orbits",
        )
    if not 0 <= x < actor.order:
        raise InvalidProductDatumException(
            key="groups.errors.invalid_product_datum",
            fallback=f"Element {x} does not belong to the acting group",
        )
    product = target.mul(reps[i], action.apply(x, reps[j]))
    index = orbit_index(action, reps)
    k = int(index[product])
    if k < 0:
        raise InvalidProductDatumException(
            key="groups.errors.invalid_product_datum",
            fallback="Orbit representatives do not cover the group",
        )
    y = int(np.flatnonzero(action.act[:, product] == reps[k])[0])
    subgroup = stabilizers[j].conjugate(actor.mul(y, x)).intersect(stabilizers[i].conjugate(y))
    if not subgroup.is_subgroup_of(stabilizers[k]):
        raise ProductDatumInconsistentException(
            key="groups.errors.product_datum_inconsistent",
            fallback=f"Subgroup {subgroup.describe()} is not contained in the stabilizer of orbit {k}",
        )
    return OrbitProductDatum(i=i, j=j, x=x, k=k, y=y, subgroup=subgroup)
