"""Подъём эквивариантных цепных отображений между полными резольвентами.

Цепное отображение F_r: X_{r+j} → X'_r ⊗ Ω задаётся значениями F_r(b_s) ∈ X'_r ⊗ Ω на kG-базисе источника;
значение хранится матрицей dim X'_r × dim Ω, а g действует на неё как ρ_{X'}(g)·A·ρ_Ω(g)ᵀ.
Условие цепного отображения: (d'_r ⊗ 1)F_r = F_{r-1}∘d_{r+j}.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from .cochains import coboundary_matrix
from .complete import CompleteResolution
from .exceptions import LiftInconsistentException
from .types import LiftValues
from .validators import ResolutionsValidators
from ..groups import right_transversal
from ..kgmodules import KGModule, free_module, tensor_product, trivial_module
from ..linalg import FpMatrix, mat_mul, mod_einsum, solve, solve_columns
from ..types import Degree

logger = logging.getLogger(__name__)

TERM_CHUNK = 512


def act_on_tensor(omega: KGModule, g: int, value: np.ndarray) -> np.ndarray:
    """Действие g на элемент X ⊗ Ω, заданный матрицей dim X × dim Ω: A ↦ ρ_X(g)·A·ρ_Ω(g)ᵀ."""
    group = omega.group
    blocks = value.reshape(-1, group.order, value.shape[-1])
    moved = blocks[:, group.table[group.inverse[g]], :].reshape(value.shape)
    return mod_einsum(omega.p, "xw,vw->xv", moved, omega.action[g])


@dataclass(frozen=True, eq=False)
class ChainLift:
    """Лениво продолжаемый подъём цепного отображения X_{•+j} → X'_• ⊗ Ω.

    Attributes:
        source: Резольвента-источник X.
        target: Резольвента-цель X'.
        shift: Сдвиг степени j.
        omega: Модуль коэффициентов Ω.
        seed: Значения (ε' ⊗ 1)F_0 на базисе X_j, форма (ранг X_j, dim Ω).
    """

    source: CompleteResolution
    target: CompleteResolution
    shift: Degree
    omega: KGModule
    seed: np.ndarray
    _values: dict[Degree, LiftValues] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.source.require(self.shift)
        self.target.require(0)
        if self.target.rank(0) != 1:
            raise LiftInconsistentException(
                key="resolutions.errors.lift_inconsistent",
                fallback="Target resolution must start from a single copy of kG in degree 0",
            )
        seed = np.mod(np.asarray(self.seed, dtype=np.int64), self.omega.p)
        order = self.target.group.order
        start = np.zeros((self.source.rank(self.shift), order, self.omega.dim), dtype=np.int64)
        start[:, 0, :] = seed.reshape(self.source.rank(self.shift), self.omega.dim)
        self._values[0] = start

    @property
    def p(self) -> int:
        return self.omega.p

    @property
    def lowest(self) -> Degree:
        return max(self.target.lo, self.source.lo - self.shift)

    @property
    def highest(self) -> Degree:
        return min(self.target.hi, self.source.hi - self.shift)

    def value(self, r: Degree) -> LiftValues:
        """Значения F_r на базисе X_{r+j}, форма (ранг X_{r+j}, dim X'_r, dim Ω)."""
        if not self.lowest <= r <= self.highest:
            self.source.require(r + self.shift)
            self.target.require(r)
        step = 1 if r >= 0 else -1
        current = 0
        while current != r:
            following = current + step
            if following not in self._values:
                self._values[following] = self._up(current) if step > 0 else self._down(current)
            current = following
        return self._values[r]

    def apply(self, r: Degree, vector: np.ndarray) -> np.ndarray:
        """Образ элемента X_{r+j} в развёрнутом базисе, матрица dim X'_r × dim Ω."""
        values = self.value(r)
        group = self.source.group
        n = group.order
        _, dim_x, dim_omega = values.shape
        result = np.zeros((dim_x, dim_omega), dtype=np.int64)
        for index in np.flatnonzero(vector):
            t, g = divmod(int(index), n)
            result = np.mod(result + int(vector[index]) * self._act(g, values[t]), self.p)
        return result

    def _act(self, g: int, value: np.ndarray) -> np.ndarray:
        return act_on_tensor(self.omega, g, value)

    def _image_of_boundary(self, r: Degree) -> np.ndarray:
        """F_r∘d_{r+1+j} на базисе X_{r+1+j}, форма (ранг, dim X'_r, dim Ω)."""
        group, p = self.source.group, self.p
        differential = self.source.differential(r + 1 + self.shift)
        current = self._values[r]
        _, dim_x, dim_omega = current.shape
        blocks = current.reshape(current.shape[0], -1, group.order, dim_omega)
        result = np.zeros((differential.source_rank, *blocks.shape[1:]), dtype=np.int64)
        for start in range(0, len(differential.terms), TERM_CHUNK):
            chunk = differential.terms[start : start + TERM_CHUNK]
            sources, targets, elements, coefficients = chunk.T
            shuffled = group.table[group.inverse[elements]]
            moved = blocks[targets[:, None, None], np.arange(blocks.shape[1])[None, :, None], shuffled[:, None, :], :]
            acted = mod_einsum(p, "mabw,mvw->mabv", moved, self.omega.action[elements])
            np.add.at(result, sources, np.mod(np.mod(coefficients, p)[:, None, None, None] * acted, p))
        return np.mod(result, p).reshape(differential.source_rank, dim_x, dim_omega)

    def _up(self, r: Degree) -> LiftValues:
        rhs = self._image_of_boundary(r)
        rank_, dim_x, dim_omega = rhs.shape
        columns = FpMatrix(self.p, np.transpose(rhs, (1, 0, 2)).reshape(dim_x, rank_ * dim_omega))
        solution = solve_columns(self.target.expanded(r + 1), columns)
        if solution is None:
            self._inconsistent(r + 1)
        upper = self.target.dim(r + 1)
        logger.debug(f"Lifted chain map to degree {r + 1} with shift {self.shift}")
        return np.transpose(solution.data.reshape(upper, rank_, dim_omega), (1, 0, 2))

    def _down(self, r: Degree) -> LiftValues:
        group, p = self.target.group, self.p
        lower = r - 1
        ResolutionsValidators.validate_size(self.target.dim(lower) * self.omega.dim, f"Lift target of degree {lower}")
        coefficients = tensor_product(free_module(group, p, self.target.rank(lower)), self.omega)
        transversal = self.source.cached(("transversal", group.whole()), lambda: right_transversal(group.whole()))
        system = coboundary_matrix(self.source.differential(r + self.shift), coefficients, transversal)
        current = self._values[r]
        boundary = self.target.expanded(r).data
        rhs = np.stack([mat_mul(boundary, current[s], p) for s in range(current.shape[0])]).reshape(-1)
        solution = solve(system, rhs)
        if solution is None:
            self._inconsistent(lower)
        logger.debug(f"Lifted chain map to degree {lower} with shift {self.shift}")
        return solution.reshape(self.source.rank(lower + self.shift), self.target.dim(lower), self.omega.dim)

    def _inconsistent(self, r: Degree) -> None:
        raise LiftInconsistentException(
            key="resolutions.errors.lift_inconsistent",
            fallback=f"Chain map with shift {self.shift} cannot be lifted to degree {r}",
            translation_params={"degree": r},
        )


def chain_lift(
    source: CompleteResolution, target: CompleteResolution, shift: Degree, omega: KGModule, seed: np.ndarray
) -> ChainLift:
    """Функция подъёма коцикла X_j → Ω до цепного отображения X_{•+j} → X'_• ⊗ Ω.

    Вверх подъём идёт по точности X' ⊗ Ω, вниз решается одна линейная система на степень.

    Args:
        source: Резольвента X.
        target: Резольвента X' той же группы.
        shift: Сдвиг j.
        omega: Модуль Ω.
        seed: Значения коцикла на базисе X_j.

    Returns:
        Лениво продолжаемый подъём.

    Raises:
        LiftInconsistentException: Линейная система подъёма несовместна.
    """
    return ChainLift(source=source, target=target, shift=shift, omega=omega, seed=seed)


def comparison_map(source: CompleteResolution, target: CompleteResolution) -> ChainLift:
    """Сравнивающее отображение X → X', поднимающее тождество k."""
    k = trivial_module(source.group, source.p)
    return source.cached(
        ("comparison", target),
        lambda: chain_lift(source, target, 0, k, np.ones((source.rank(0), 1), dtype=np.int64)),
    )
