import logging

import numpy as np

from .diagonal import DiagonalComponent, diagonal_component
from .exceptions import PairingMismatchException, ProductNotCocycleException, SpaceMismatchException
from .types import DiagonalMethod
from ..groups import Subgroup
from ..kgmodules import KGModule, ModulePairing
from ..linalg import FpMatrix, mat_mul, mod_einsum
from ..resolutions import CohomologyClass, CohomologySpace, CompleteResolution, tate_cohomology
from ..types import Vector

logger = logging.getLogger(__name__)


def unit_class(resolution: CompleteResolution, trivial: KGModule, subgroup: Subgroup | None = None) -> CohomologyClass:
    """Единица кольца Ĥ*(V, k): класс аугментации в степени 0."""
    space = tate_cohomology(resolution, trivial, 0, subgroup)
    return space.class_of(np.ones(space.cochain_dim, dtype=np.int64))


def _scalar_pairing(left: KGModule, right: KGModule) -> ModulePairing:
    if not (left.dim == right.dim == 1 and left.is_trivial() and right.is_trivial()):
        raise PairingMismatchException(
            key="cup.errors.pairing_required",
            fallback=f"Product of classes in {left.name} and {right.name} needs an explicit pairing",
        )
    return ModulePairing(left=left, right=right, out=left, matrix=FpMatrix(left.p, np.ones((1, 1), dtype=np.int64)))


def product_cochain(
    component: DiagonalComponent,
    a: CohomologyClass,
    b: CohomologyClass,
    pairing: ModulePairing,
    target: CohomologySpace,
) -> Vector:
    """Функция вычисления коцикла (-1)^{rs}·pairing∘(f ⊗ ḡ)∘F_r на представителях классов.

    Значение на c·b_t, c из трансверсали, равно pairing((f ⊗ ḡ)(c·F_r(b_t))), где c действует на X_r ⊗ Ω_s
    диагонально.

    Args:
        component: Компонента диагонали (r, s).
        a: Левый сомножитель степени r.
        b: Правый сомножитель степени s.
        pairing: Спаривание модулей коэффициентов.
        target: Группа когомологий произведения.

    Returns:
        Координаты коцепи степени r + s.
    """
    resolution = component.resolution
    group, p = resolution.group, resolution.p
    r, s = component.r, component.s
    left = a.space.complex.expand(r, a.representative)
    descended = component.quotient.descend(b.space.complex.expand(s, b.representative))
    omega = component.quotient.module
    blocks = left.reshape(left.shape[0], resolution.rank(r), group.order)
    transversal = target.complex.transversal
    result = np.zeros((resolution.rank(r + s), transversal.size, pairing.out.dim), dtype=np.int64)
    for index, c in enumerate(transversal.reps):
        moved = blocks[:, :, group.table[c]].reshape(left.shape[0], -1)
        right = mat_mul(descended, omega.action[c], p)
        tensor = mod_einsum(p, "mx,txw,nw->tmn", moved, component.values, right)
        result[:, index] = mat_mul(tensor.reshape(tensor.shape[0], -1), pairing.matrix.data.T, p)
    if (r * s) % 2:
        result = np.mod(-result, p)
    return result.reshape(-1)


def cup(
    a: CohomologyClass,
    b: CohomologyClass,
    pairing: ModulePairing | None = None,
    method: DiagonalMethod | None = None,
) -> CohomologyClass:
    """Функция вычисления cup-произведения Ĥⁱ(V, M) ⊗ Ĥʲ(V, N) → Ĥ^{i+j}(V, L).

    Args:
        a: Класс степени i.
        b: Класс степени j над той же резольвентой и подгруппой.
        pairing: Спаривание M ⊗ N → L (для скалярных коэффициентов можно опустить).
        method: Способ построения диагонали.

    Returns:
        Класс произведения.

    Raises:
        SpaceMismatchException: Классы заданы над разными резольвентами или подгруппами.
        PairingMismatchException: Спаривание не согласовано с модулями сомножителей.
        WindowExhaustedException: Степень произведения вне окна.
        ProductNotCocycleException: Произведение коциклов не коцикл.
    """
    left, right = a.space, b.space
    resolution = left.complex.resolution
    if right.complex.resolution is not resolution or right.subgroup != left.subgroup:
        raise SpaceMismatchException(
            key="cup.errors.space_mismatch",
            fallback=f"Cannot multiply classes of {left.describe()} and {right.describe()}",
        )
    pairing = pairing or _scalar_pairing(left.module, right.module)
    if pairing.left is not left.module or pairing.right is not right.module:
        raise PairingMismatchException(
            key="cup.errors.pairing_mismatch",
            fallback=(
                f"Pairing {pairing.left.name}⊗{pairing.right.name} "
                f"does not match {left.module.name}⊗{right.module.name}"
            ),
        )
    target = tate_cohomology(resolution, pairing.out, a.degree + b.degree, left.subgroup)
    if target.dim == 0:
        return target.zero()
    component = diagonal_component(resolution, a.degree, b.degree, method)
    cochain = product_cochain(component, a, b, pairing, target)
    if not target.is_cocycle(cochain):
        raise ProductNotCocycleException(
            key="cup.errors.product_not_cocycle",
            fallback=f"Product of degrees ({a.degree}, {b.degree}) over {left.subgroup.describe()} is not a cocycle",
        )
    return target.class_of(cochain)
