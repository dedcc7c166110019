import logging

from .context import build_context
from .exceptions import DecompositionInconsistentException, NotAbelianException
from .types import AbelianRing
from ..groups import FiniteGroup
from ..resolutions import Backend
from ..types import Prime, Window

logger = logging.getLogger(__name__)


def abelian_ring(
    group: FiniteGroup, p: Prime, window: Window | None = None, backend: Backend = Backend.AUTO
) -> AbelianRing:
    """Функция вычисления размерностей ĤH*(kG, kG) ≅ kG ⊗ Ĥ*(G, k) для абелевой G.

    Сопряжение на абелевой группе тривиально, поэтому каждая орбита одноэлементна и H_i = G.
    Размерность |G|·dim Ĥⁿ(G, k) сверяется с размерностью Ĥⁿ(G, kG), вычисленной напрямую.

    Args:
        group: Абелева группа G.
        p: Характеристика.
        window: Окно резольвенты.
        backend: Реализация полной резольвенты.

    Returns:
        Размерности по степеням внутри окна.

    Raises:
        NotAbelianException: G не абелева.
        DecompositionInconsistentException: Размерности не совпали.
    """
    if not group.is_abelian():
        raise NotAbelianException(
            key="decomp.errors.not_abelian",
            fallback=f"Group {group.name} is not abelian",
            translation_params={"group": group.name},
        )
    context = build_context(group, p, window, backend)
    lo, hi = context.window
    dimensions: dict[int, int] = {}
    for n in range(lo + 1, hi):
        expected = group.order * context.workspace.dimension(n)
        decomposed = context.dimension(n)
        direct = context.space(n).dim if group.order % p == 0 else 0
        if not expected == decomposed == direct:
            raise DecompositionInconsistentException(
                key="decomp.errors.inconsistent",
                fallback=f"Degree {n}: |G|·dim Ĥ = {expected}, decomposition {decomposed}, direct {direct}",
            )
        dimensions[n] = expected
    logger.info(f"Abelian ring of {group.name} over F_{p}: dims {dimensions}")
    return AbelianRing(group=group.name, p=p, dimensions=dimensions)
