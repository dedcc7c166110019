import logging
from functools import cached_property

import numpy as np

from .exceptions import InvalidOrbitException, SpaceMismatchException
from .types import Orbit
from ..cup import unit_class
from ..groups import FiniteGroup, GroupAction, Subgroup, conjugation_action, orbit_representatives
from ..kgmodules import KGModule, ModulePairing, multiplication_pairing
from ..resolutions import Backend, CohomologyClass, CohomologySpace, CompleteResolution, TateWorkspace
from ..types import Degree, Prime, Window
from ..validators import validate_prime

logger = logging.getLogger(__name__)


class DecompositionContext:
    """Контекст аддитивного разложения Ĥ*(H, kG) ≅ ⊕ᵢ Ĥ*(H_i, k).

    Все группы когомологий строятся на одной полной резольвенте действующей группы H;
    когомологии стабилизаторов получаются ограничением той же резольвенты.
    """

    def __init__(self, action: GroupAction, p: Prime, window: Window | None = None, backend: Backend = Backend.AUTO):
        self.action = action
        self.p = p
        self.workspace = TateWorkspace(action.actor, p, window, backend)
        self.orbits = tuple(
            Orbit(index=index, representative=rep, members=members, stabilizer=stabilizer)
            for index, (rep, members, stabilizer) in enumerate(orbit_representatives(action))
        )

    @property
    def actor(self) -> FiniteGroup:
        return self.action.actor

    @property
    def whole(self) -> Subgroup:
        return self.actor.whole()

    @property
    def window(self) -> Window:
        return self.workspace.window

    @property
    def resolution(self) -> CompleteResolution:
        return self.workspace.resolution

    @property
    def trivial(self) -> KGModule:
        return self.workspace.trivial

    @cached_property
    def pairing(self) -> ModulePairing:
        return multiplication_pairing(self.action, self.p)

    @property
    def module(self) -> KGModule:
        """Модуль перестановок kG над H."""
        return self.pairing.left

    @property
    def representatives(self) -> list[int]:
        return [orbit.representative for orbit in self.orbits]

    @property
    def stabilizers(self) -> list[Subgroup]:
        return [orbit.stabilizer for orbit in self.orbits]

    def orbit(self, i: int) -> Orbit:
        if not 0 <= i < len(self.orbits):
            raise InvalidOrbitException(
                key="decomp.errors.invalid_orbit",
                fallback=f"Orbit index {i} is out of range for {len(self.orbits)} orbits",
                translation_params={"index": i, "count": len(self.orbits)},
            )
        return self.orbits[i]

    def space(self, n: Degree) -> CohomologySpace:
        """Ĥⁿ(H, kG)."""
        return self.workspace.space(n, self.module)

    def local_space(self, i: int, n: Degree, subgroup: Subgroup | None = None) -> CohomologySpace:
        """Ĥⁿ(H_i, k) или Ĥⁿ(V, k) для подгруппы V."""
        return self.workspace.space(n, self.trivial, subgroup or self.orbit(i).stabilizer)

    def local_dimensions(self, n: Degree) -> tuple[int, ...]:
        return tuple(self.workspace.dimension(n, subgroup=orbit.stabilizer) for orbit in self.orbits)

    def dimension(self, n: Degree) -> int:
        """dim Ĥⁿ(H, kG) = Σᵢ dim Ĥⁿ(H_i, k)."""
        return sum(self.local_dimensions(n))

    def unit(self) -> CohomologyClass:
        """Единица кольца Ĥ*(H, kG): e_1 в степени 0."""
        space = self.space(0)
        cochain = np.zeros(space.cochain_dim, dtype=np.int64)
        cochain[self.action.target.identity] = 1
        return space.class_of(cochain)

    def local_unit(self, i: int) -> CohomologyClass:
        return unit_class(self.resolution, self.trivial, self.orbit(i).stabilizer)

    def check_global(self, cls: CohomologyClass) -> None:
        space = cls.space
        foreign = space.complex.resolution is not self.resolution or space.module is not self.module
        if foreign or not space.subgroup.is_whole():
            raise SpaceMismatchException(
                key="decomp.errors.space_mismatch",
                fallback=f"Class of {space.describe()} does not belong to Ĥ*({self.actor.name}, {self.module.name})",
            )

    def check_local(self, i: int, cls: CohomologyClass) -> None:
        space = cls.space
        orbit = self.orbit(i)
        if (
            space.complex.resolution is not self.resolution
            or space.module is not self.trivial
            or space.subgroup != orbit.stabilizer
        ):
            raise SpaceMismatchException(
                key="decomp.errors.space_mismatch",
                fallback=f"Class of {space.describe()} does not belong to Ĥ*({orbit.stabilizer.describe()}, k)",
            )

    def __repr__(self) -> str:
        return (
            f"DecompositionContext({self.actor.name} on {self.action.target.name}, p={self.p}, "
            f"orbits={len(self.orbits)}, window={self.window})"
        )


def build_context(
    source: FiniteGroup | GroupAction, p: Prime, window: Window | None = None, backend: Backend = Backend.AUTO
) -> DecompositionContext:
    """Функция построения контекста разложения.

    Args:
        source: Действие H на G автоморфизмами или группа G (тогда G действует на себе сопряжением).
        p: Характеристика.
        window: Окно резольвенты.
        backend: Реализация полной резольвенты.

    Returns:
        Контекст с орбитами, стабилизаторами и ленивыми группами когомологий.

    Raises:
        InvalidPrimeException: p не простое.
    """
    validate_prime(p)
    action = conjugation_action(source) if isinstance(source, FiniteGroup) else source
    context = DecompositionContext(action, p, window, backend)
    logger.info(
        f"Decomposition of {action.actor.name} on {action.target.name} over F_{p}: "
        f"stabilizer orders {[orbit.stabilizer.order for orbit in context.orbits]}"
    )
    return context
