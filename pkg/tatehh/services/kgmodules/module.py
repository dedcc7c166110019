import logging
from dataclasses import InitVar, dataclass

import numpy as np

from .exceptions import GroupMismatchException, InvalidModuleException
from ..groups import FiniteGroup, GroupAction, Subgroup, conjugation_action, coset_reps
from ..linalg import FpMatrix, Subquotient, kernel_basis, mat_mul, subquotient_basis
from ..types import Prime, Vector
from ..validators import validate_prime
from ...config import DEFAULT_SEED, HOMOMORPHISM_CHECK_LIMIT, SAMPLED_CHECKS

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True, eq=False)
class KGModule:
    """Конечномерный модуль над групповой алгеброй kG, k = F_p.

    Attributes:
        group: Группа G.
        p: Характеристика.
        action: Массив (|G|, dim, dim), action[g] есть матрица действия g.
        name: Имя модуля для отчётов.
        check: Проверять ли аксиомы модуля при построении.
    """

    group: FiniteGroup
    p: Prime
    action: np.ndarray
    name: str = "M"
    check: InitVar[bool] = True

    def __post_init__(self, check: bool) -> None:
        validate_prime(self.p)
        action = np.mod(np.asarray(self.action, dtype=np.int64), self.p)
        n = self.group.order
        if action.ndim != 3 or action.shape[0] != n or action.shape[1] != action.shape[2]:
            raise InvalidModuleException(
                key="kgmodules.errors.invalid_module",
                fallback=f"Action array of shape {action.shape} does not fit a group of order {n}",
            )
        action.setflags(write=False)
        object.__setattr__(self, "action", action)
        if check:
            self.validate()

    @property
    def dim(self) -> int:
        return int(self.action.shape[1])

    def matrix(self, g: int) -> FpMatrix:
        return FpMatrix(self.p, self.action[g])

    def act(self, g: int, vector: Vector) -> Vector:
        return mat_mul(self.action[g], np.asarray(vector, dtype=np.int64).reshape(-1, 1), self.p).reshape(-1)

    def validate(self) -> None:
        """Метод проверки аксиом модуля.

        Проверяются action(1) = I и action(gh) = action(g)·action(h): все пары при |G| ≤ 16,
        выборка пар и все пары (g, g⁻¹) иначе. Обратимость следует из второго тождества на парах (g, g⁻¹).

        Raises:
            InvalidModuleException: Если аксиома нарушена.
        """
        n, dim = self.group.order, self.dim
        if not np.array_equal(self.action[0], np.eye(dim, dtype=np.int64)):
            raise InvalidModuleException(
                key="kgmodules.errors.identity_action",
                fallback=f"Identity of {self.group.name} does not act as the identity on {self.name}",
            )
        if n <= HOMOMORPHISM_CHECK_LIMIT:
            pairs = [(g, h) for g in range(n) for h in range(n)]
        else:
            rng = np.random.default_rng(DEFAULT_SEED)
            pairs = [tuple(int(v) for v in rng.integers(0, n, size=2)) for _ in range(SAMPLED_CHECKS)]
            pairs += [(g, self.group.inv(g)) for g in range(n)]
        for g, h in pairs:
            if not np.array_equal(self.action[self.group.mul(g, h)], mat_mul(self.action[g], self.action[h], self.p)):
                raise InvalidModuleException(
                    key="kgmodules.errors.not_a_homomorphism",
                    fallback=(
                        f"Module {self.name} violates action(gh) = action(g)action(h) "
                        f"at ({self.group.label(g)}, {self.group.label(h)})"
                    ),
                )

    def is_trivial(self) -> bool:
        return bool((self.action == np.eye(self.dim, dtype=np.int64)[None]).all())

    def fixed_subspace(self) -> FpMatrix:
        """Метод вычисления подмодуля инвариантов M^G.

        Returns:
            Матрица, столбцы которой образуют базис M^G.
        """
        identity = np.eye(self.dim, dtype=np.int64)
        stacked = np.concatenate([self.action[g] - identity for g in range(self.group.order)], axis=0)
        return kernel_basis(FpMatrix(self.p, stacked))

    def __repr__(self) -> str:
        return f"KGModule({self.name!r}, group={self.group.name}, p={self.p}, dim={self.dim})"


def _same_ring(left: KGModule, right: KGModule) -> None:
    if left.group is not right.group or left.p != right.p:
        raise GroupMismatchException(
            key="kgmodules.errors.group_mismatch",
            fallback=f"Modules {left.name} and {right.name} are defined over different group algebras",
        )


def trivial_module(group: FiniteGroup, p: Prime) -> KGModule:
    """Тривиальный модуль k размерности 1."""
    return KGModule(group, p, np.ones((group.order, 1, 1), dtype=np.int64), name="k")


def permutation_module(action: GroupAction, p: Prime, name: str | None = None) -> KGModule:
    """Функция построения модуля kG для действия H на G автоморфизмами.

    Базисный вектор e_x переходит в e_{^h x}.

    Args:
        action: Действие H на G.
        p: Характеристика.
        name: Имя модуля (по умолчанию k<G>).

    Returns:
        Модуль над kH размерности |G|.
    """
    m, n = action.actor.order, action.target.order
    matrices = np.zeros((m, n, n), dtype=np.int64)
    for h in range(m):
        matrices[h, action.act[h], np.arange(n)] = 1
    return KGModule(action.actor, p, matrices, name=name or f"k{action.target.name}")


def conjugation_module(group: FiniteGroup, p: Prime) -> KGModule:
    """Модуль kG с действием сопряжением g·x = gxg⁻¹."""
    return permutation_module(conjugation_action(group), p, name=f"k{group.name}^conj")


def regular_module(group: FiniteGroup, p: Prime) -> KGModule:
    """Регулярный модуль kG, g·e_h = e_{gh}."""
    n = group.order
    matrices = np.zeros((n, n, n), dtype=np.int64)
    for g in range(n):
        matrices[g, group.table[g], np.arange(n)] = 1
    return KGModule(group, p, matrices, name=f"k{group.name}", check=False)


def free_module(group: FiniteGroup, p: Prime, rank: int) -> KGModule:
    """Свободный модуль ранга rank; базисный вектор h·b_t имеет номер t·|G| + h."""
    regular = regular_module(group, p)
    identity = np.eye(rank, dtype=np.int64)
    matrices = np.stack([np.kron(identity, regular.action[g]) for g in range(group.order)])
    return KGModule(group, p, matrices, name=f"k{group.name}^{rank}", check=False)


def restrict(module: KGModule, subgroup: Subgroup) -> KGModule:
    """Функция ограничения модуля на подгруппу.

    Args:
        module: Модуль над kG.
        subgroup: Подгруппа H ≤ G.

    Returns:
        Модуль над kH (нумерация элементов как в subgroup.as_group()).
    """
    if subgroup.parent is not module.group:
        raise GroupMismatchException(
            key="kgmodules.errors.group_mismatch",
            fallback=f"{subgroup.describe()} is not a subgroup of {module.group.name}",
        )
    return KGModule(
        subgroup.as_group(),
        module.p,
        module.action[list(subgroup.members)],
        name=f"{module.name}|{subgroup.describe()}",
        check=False,
    )


def induce(module: KGModule, subgroup: Subgroup) -> KGModule:
    """Функция индуцирования модуля с подгруппы на группу.

    Базис kG ⊗_{kH} M есть g_i ⊗ m_a по представителям левых смежных классов g_i;
    x·(g_i ⊗ m) = g_j ⊗ h·m, где x·g_i = g_j·h.

    Args:
        module: Модуль над kH в нумерации subgroup.as_group().
        subgroup: Подгруппа H ≤ G.

    Returns:
        Модуль над kG размерности [G:H]·dim M.
    """
    group = subgroup.parent
    if module.group.order != subgroup.order:
        raise GroupMismatchException(
            key="kgmodules.errors.group_mismatch",
            fallback=f"Module over a group of order {module.group.order} cannot be induced from {subgroup.describe()}",
        )
    reps = coset_reps(group, subgroup)
    position = {h: i for i, h in enumerate(subgroup.members)}
    coset_of = np.empty(group.order, dtype=np.int64)
    for index, rep in enumerate(reps):
        for h in subgroup.members:
            coset_of[group.mul(rep, h)] = index
    dim, count = module.dim, len(reps)
    matrices = np.zeros((group.order, count * dim, count * dim), dtype=np.int64)
    for x in range(group.order):
        for i, rep in enumerate(reps):
            element = group.mul(x, rep)
            j = int(coset_of[element])
            h = group.mul(group.inv(reps[j]), element)
            matrices[x, j * dim : (j + 1) * dim, i * dim : (i + 1) * dim] = module.action[position[h]]
    return KGModule(group, module.p, matrices, name=f"{module.name}↑{group.name}")


def direct_sum(left: KGModule, right: KGModule) -> KGModule:
    _same_ring(left, right)
    a, b = left.dim, right.dim
    matrices = np.zeros((left.group.order, a + b, a + b), dtype=np.int64)
    matrices[:, :a, :a] = left.action
    matrices[:, a:, a:] = right.action
    return KGModule(left.group, left.p, matrices, name=f"{left.name}⊕{right.name}", check=False)


def tensor_product(left: KGModule, right: KGModule) -> KGModule:
    """Тензорное произведение над k с диагональным действием; m⊗n имеет номер m·dim N + n."""
    _same_ring(left, right)
    matrices = np.stack(
        [np.mod(np.kron(left.action[g], right.action[g]), left.p) for g in range(left.group.order)]
    )
    return KGModule(left.group, left.p, matrices, name=f"{left.name}⊗{right.name}", check=False)


def dual(module: KGModule) -> KGModule:
    """Двойственный модуль, (g·φ)(m) = φ(g⁻¹m)."""
    inverse = module.group.inverse
    matrices = np.transpose(module.action[inverse], (0, 2, 1))
    return KGModule(module.group, module.p, matrices, name=f"{module.name}*", check=False)


def quotient(module: KGModule, submodule: FpMatrix) -> tuple[KGModule, Subquotient]:
    """Функция построения фактор-модуля M/S по инвариантному подпространству.

    Args:
        module: Модуль M.
        submodule: Столбцы, порождающие kG-подмодуль S.

    Returns:
        Фактор-модуль и базис фактора (представители и проекция M → M/S).
    """
    basis = subquotient_basis(FpMatrix.identity(module.p, module.dim), submodule)
    reps, projection = basis.reps.data, basis.projection.data
    matrices = np.stack(
        [mat_mul(projection, mat_mul(module.action[g], reps, module.p), module.p) for g in range(module.group.order)]
    )
    return KGModule(module.group, module.p, matrices, name=f"{module.name}/S", check=False), basis
