from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidPairingException
from .module import KGModule, permutation_module, trivial_module
from ..groups import FiniteGroup, GroupAction, conjugation_action
from ..linalg import FpMatrix, mat_mul
from ..types import Prime


@dataclass(slots=True, frozen=True, eq=False)
class ModulePairing:
    """Эквивариантное билинейное спаривание M ⊗ N → L.

    Attributes:
        left: Модуль M.
        right: Модуль N.
        out: Модуль L.
        matrix: Матрица dim L × (dim M · dim N); m_a ⊗ n_b имеет номер a·dim N + b.
    """

    left: KGModule
    right: KGModule
    out: KGModule
    matrix: FpMatrix

    def __post_init__(self) -> None:
        expected = (self.out.dim, self.left.dim * self.right.dim)
        if self.matrix.shape != expected:
            raise InvalidPairingException(
                key="kgmodules.errors.pairing_shape",
                fallback=f"Pairing matrix has shape {self.matrix.shape}, expected {expected}",
            )
        if not (self.left.group is self.right.group is self.out.group):
            raise InvalidPairingException(
                key="kgmodules.errors.pairing_group",
                fallback="Pairing modules are defined over different groups",
            )
        self.validate()

    def validate(self) -> None:
        """Метод проверки эквивариантности pairing(g·m, g·n) = g·pairing(m, n) на базисе.

        Raises:
            InvalidPairingException: Если равенство нарушено для некоторого g.
        """
        p, data = self.matrix.p, self.matrix.data
        for g in range(self.left.group.order):
            diagonal = np.mod(np.kron(self.left.action[g], self.right.action[g]), p)
            if not np.array_equal(mat_mul(self.out.action[g], data, p), mat_mul(data, diagonal, p)):
                raise InvalidPairingException(
                    key="kgmodules.errors.pairing_not_equivariant",
                    fallback=f"Pairing is not equivariant at {self.left.group.label(g)}",
                )

    def apply(self, m: np.ndarray, n: np.ndarray) -> np.ndarray:
        return mat_mul(self.matrix.data, np.kron(m, n).reshape(-1, 1), self.matrix.p).reshape(-1)


def scalar_pairing(group: FiniteGroup, p: Prime) -> ModulePairing:
    """Умножение поля k ⊗ k → k."""
    k = trivial_module(group, p)
    return ModulePairing(left=k, right=k, out=k, matrix=FpMatrix(p, np.ones((1, 1), dtype=np.int64)))


def multiplication_pairing(source: FiniteGroup | GroupAction, p: Prime) -> ModulePairing:
    """Функция построения спаривания умножения kG ⊗ kG → kG, e_g ⊗ e_h ↦ e_{gh}.

    Спаривание эквивариантно для любого действия автоморфизмами; для группы без действия
    берётся сопряжение.

    Args:
        source: Группа G или действие H на G.
        p: Характеристика.

    Returns:
        Спаривание модуля kG с собой.
    """
    action = conjugation_action(source) if isinstance(source, FiniteGroup) else source
    module = permutation_module(action, p)
    target = action.target
    n = target.order
    matrix = np.zeros((n, n * n), dtype=np.int64)
    g, h = np.divmod(np.arange(n * n), n)
    matrix[target.table[g, h], np.arange(n * n)] = 1
    return ModulePairing(left=module, right=module, out=module, matrix=FpMatrix(p, matrix))
