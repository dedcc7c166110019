from dataclasses import dataclass

import numpy as np

from .complete import CompleteResolution
from .free_maps import FreeMap
from ..groups import RightTransversal, Subgroup, right_transversal
from ..kgmodules import KGModule
from ..kgmodules.exceptions import GroupMismatchException
from ..linalg import FpMatrix, mod_einsum
from ..types import Degree, Vector


def coboundary_matrix(differential: FreeMap, module: KGModule, transversal: RightTransversal) -> FpMatrix:
    """Функция построения матрицы кограницы f ↦ f∘d над подгруппой V.

    Коцепь f ∈ Hom_{kV}(X, M) задаётся значениями f(c·b_t) на представителях правых смежных классов Vc;
    её координата (t, c, m) имеет номер (t·[G:V] + c)·dim M + m. Если c·g = v·c', то
    f(c·g·b_t) = ρ(v)·f(c'·b_t).

    Args:
        differential: Отображение свободных модулей d: X_{n+1} → X_n.
        module: Модуль коэффициентов над всей группой.
        transversal: Разложение группы на классы Vc.

    Returns:
        Матрица кограницы C^n → C^{n+1}.
    """
    group, p = module.group, module.p
    cosets, dim = transversal.size, module.dim
    block = np.zeros((differential.source_rank, cosets, dim, differential.target_rank, cosets, dim), dtype=np.int64)
    if len(differential.terms):
        reps = np.array(transversal.reps, dtype=np.int64)
        elements = group.table[reps[None, :], differential.elements[:, None]]
        factors = transversal.factor[elements]
        targets = transversal.coset_of[elements]
        values = np.mod(np.mod(differential.coefficients, p)[:, None, None, None] * module.action[factors], p)
        rows = np.broadcast_to(differential.sources[:, None], elements.shape)
        cols = np.broadcast_to(differential.targets[:, None], elements.shape)
        own = np.broadcast_to(np.arange(cosets)[None, :], elements.shape)
        np.add.at(block, (rows, own, slice(None), cols, targets, slice(None)), values)
    rows_total = differential.source_rank * cosets * dim
    cols_total = differential.target_rank * cosets * dim
    return FpMatrix(p, block.reshape(rows_total, cols_total))


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """Комплекс коцепей Hom_{kV}(X, M) полной резольвенты, ограниченной на подгруппу V.

    Attributes:
        resolution: Полная резольвента группы G.
        module: Модуль коэффициентов над G.
        subgroup: Подгруппа V ≤ G.
        transversal: Правые смежные классы Vc.
    """

    resolution: CompleteResolution
    module: KGModule
    subgroup: Subgroup
    transversal: RightTransversal

    @classmethod
    def build(
        cls, resolution: CompleteResolution, module: KGModule, subgroup: Subgroup | None = None
    ) -> "CochainComplex":
        group = resolution.group
        if module.group is not group or module.p != resolution.p:
            raise GroupMismatchException(
                key="kgmodules.errors.group_mismatch",
                fallback=f"Module {module.name} is not defined over the group algebra of {group.name}",
            )
        subgroup = subgroup or group.whole()
        transversal = resolution.cached(("transversal", subgroup), lambda: right_transversal(subgroup))
        return cls(resolution=resolution, module=module, subgroup=subgroup, transversal=transversal)

    @property
    def p(self) -> int:
        return self.resolution.p

    def dim(self, n: Degree) -> int:
        return self.resolution.rank(n) * self.transversal.size * self.module.dim

    def coboundary(self, n: Degree) -> FpMatrix:
        """Кограница δ_n: C^n → C^{n+1}, f ↦ f∘d_{n+1}."""
        key = ("coboundary", self.subgroup, self.module, n)
        return self.resolution.cached(
            key, lambda: coboundary_matrix(self.resolution.differential(n + 1), self.module, self.transversal)
        )

    def values(self, n: Degree, cochain: Vector) -> np.ndarray:
        """Значения f(c·b_t) формы (ранг, [G:V], dim M)."""
        shape = (self.resolution.rank(n), self.transversal.size, self.module.dim)
        return np.asarray(cochain, dtype=np.int64).reshape(shape)

    def expand(self, n: Degree, cochain: Vector) -> np.ndarray:
        """Метод вычисления значений коцепи на всём k-базисе h·b_t.

        Args:
            n: Степень.
            cochain: Координаты коцепи.

        Returns:
            Матрица dim M × (ранг·|G|), столбец t·|G| + h есть f(h·b_t) = ρ(v)·f(c·b_t) при h = v·c.
        """
        values = self.values(n, cochain)
        factors = self.module.action[self.transversal.factor]
        expanded = mod_einsum(self.p, "hij,thj->ith", factors, values[:, self.transversal.coset_of, :])
        return expanded.reshape(self.module.dim, -1)

    def restrict_expanded(self, n: Degree, expanded: np.ndarray) -> Vector:
        """Координаты коцепи по её значениям на развёрнутом базисе (обратная к expand операция)."""
        group_order = self.resolution.group.order
        table = expanded.reshape(self.module.dim, self.resolution.rank(n), group_order)
        picked = table[:, :, list(self.transversal.reps)]
        return np.transpose(picked, (1, 2, 0)).reshape(-1).copy()

    def is_cocycle(self, n: Degree, cochain: Vector) -> bool:
        return not self.coboundary(n).apply(cochain).any()
