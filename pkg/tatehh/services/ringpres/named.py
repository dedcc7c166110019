"""Именованные образующие x, z, z⁻¹, C, W₁, W₂, W₂⁻¹ кольца ĤH*(kS₃, kS₃) в характеристике 3."""

import logging

from .constants import NAMED_GROUP_ORDER, NAMED_PRIME, NAMED_STABILIZER_ORDERS, NAMED_TOP_DEGREE
from .engine import GradedRing, RingEngine
from .exceptions import NamingUnavailableException, NormalizationFailedException, WindowTooSmallException
from .types import Generator
from ..decomp import assemble
from ..linalg import FpMatrix, solve
from ..maps import restriction
from ..resolutions import CohomologyClass

logger = logging.getLogger(__name__)


def _normalize(
    candidate: CohomologyClass, image: CohomologyClass, target: CohomologyClass, name: str
) -> CohomologyClass:
    """Кратное s·candidate с s·image = target."""
    matrix = FpMatrix.from_columns(image.space.p, [image.coordinates], image.space.dim)
    solution = None if target.is_zero() else solve(matrix, target.coordinates)
    if solution is None:
        raise NormalizationFailedException(
            key="ringpres.errors.normalization_failed",
            fallback=f"Cannot normalize {name}: restriction is not a multiple of the target class",
            translation_params={"name": name},
        )
    return candidate.scale(int(solution[0]))


def _inverse(ring: GradedRing, element: CohomologyClass, name: str) -> CohomologyClass:
    inverse = ring.inverse(element)
    if inverse is None:
        raise NormalizationFailedException(
            key="ringpres.errors.normalization_failed",
            fallback=f"{name} has no inverse in the window",
            translation_params={"name": name},
        )
    return inverse


def _check_available(engine: RingEngine) -> None:
    context = engine.context
    actor = context.actor
    orders = tuple(orbit.stabilizer.order for orbit in context.orbits)
    if (
        context.p != NAMED_PRIME
        or actor.order != NAMED_GROUP_ORDER
        or actor.is_abelian()
        or orders != NAMED_STABILIZER_ORDERS
        or not context.action.is_conjugation()
    ):
        raise NamingUnavailableException(
            key="ringpres.errors.naming_unavailable",
            fallback=f"Named generators exist only for S3 over F_3, not {actor.name} over F_{context.p}",
            translation_params={"group": actor.name, "p": context.p},
        )
    if not (engine.ring.computable(NAMED_TOP_DEGREE) and engine.ring.computable(-NAMED_TOP_DEGREE)):
        raise WindowTooSmallException(
            key="ringpres.errors.window_too_small",
            fallback=f"Named generators need degrees ±{NAMED_TOP_DEGREE} inside window {context.window}",
        )


def named_generators(engine: RingEngine) -> tuple[list[Generator], dict[str, CohomologyClass]]:
    """Функция построения именованных образующих для S₃ над F_3.

    Процесс включает:
    1. Локальные классы w₁, w₂ как базисные классы Ĥ¹(N, k), Ĥ²(N, k) и обратный w₂⁻¹
    2. Нормировку x и z условиями res x = w₁w₂ и res z = w₂², обратный z⁻¹
    3. Перенос в Ĥ*(S₃, kG) отображениями ψ₁ и ψ₂; C = E₂ + 1 при E₂ = ψ₂(1)

    Args:
        engine: Движок умножения контекста S₃ над F_3.

    Returns:
        Образующие в порядке x, z, z⁻¹, C, W₁, W₂, W₂⁻¹ и дополнительный класс E2.

    Raises:
        NamingUnavailableException: Контекст не S₃ над F_3.
        WindowTooSmallException: Окно не содержит степеней ±4.
        NormalizationFailedException: Классы не нормируются.
    """
    _check_available(engine)
    context = engine.context
    whole, normal = context.whole, context.orbit(1).stabilizer
    top, local = engine.local(whole), engine.local(normal)

    w1 = local.space(1).basis_class(0)
    w2 = local.space(2).basis_class(0)
    w2inv = _inverse(local, w2, "w2")
    x_candidate = top.space(3).basis_class(0)
    z_candidate = top.space(4).basis_class(0)
    x = _normalize(x_candidate, restriction(x_candidate, normal), local.product([w1, w2]), "x")
    z = _normalize(z_candidate, restriction(z_candidate, normal), local.product([w2, w2]), "z")
    zinv = _inverse(top, z, "z")

    e2 = assemble(context, 1, local.unit)
    generators = [
        Generator("x", 3, assemble(context, 0, x), "psi_1(x)"),
        Generator("z", 4, assemble(context, 0, z), "psi_1(z)"),
        Generator("zinv", -4, assemble(context, 0, zinv), "psi_1(z^-1)"),
        Generator("C", 0, e2 + engine.ring.unit, "psi_2(1) + psi_1(1)"),
        Generator("W1", 1, assemble(context, 1, w1), "psi_2(w1)"),
        Generator("W2", 2, assemble(context, 1, w2), "psi_2(w2)"),
        Generator("W2inv", -2, assemble(context, 1, w2inv), "psi_2(w2^-1)"),
    ]
    logger.info(f"Named generators of {context.actor.name} normalized in window {context.window}")
    return generators, {"E2": e2}
