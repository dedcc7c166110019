import logging

from .context import DecompositionContext
from .exceptions import InvalidDoubleCosetsException, NotInDegreeZeroException
from .types import DecomposedClass, ProductSummand, ProductTrace, RepresentativeChoice
from ..cup import cup
from ..groups import OrbitProductDatum, double_coset, double_coset_reps, locate_product_datum
from ..maps import conjugation, corestriction, pi_push, restriction, theta_push
from ..resolutions import CohomologyClass

logger = logging.getLogger(__name__)


def decompose(context: DecompositionContext, zeta: CohomologyClass) -> DecomposedClass:
    """Функция разложения класса ζ ∈ Ĥⁿ(H, kG) по орбитам.

    Компонента i равна π_{g_i}*(res^H_{H_i} ζ).

    Args:
        context: Контекст разложения.
        zeta: Класс Ĥⁿ(H, kG).

    Returns:
        Разложенный класс.

    Raises:
        SpaceMismatchException: Класс не из Ĥ*(H, kG) контекста.
    """
    context.check_global(zeta)
    components = tuple(
        pi_push(orbit.representative, restriction(zeta, orbit.stabilizer), context.trivial)
        for orbit in context.orbits
    )
    return DecomposedClass(degree=zeta.degree, components=components)


def assemble(context: DecompositionContext, i: int, alpha: CohomologyClass) -> CohomologyClass:
    """Функция вычисления ψ_i(α) = cor^H_{H_i} θ_{g_i}*(α).

    Args:
        context: Контекст разложения.
        i: Номер орбиты.
        alpha: Класс Ĥⁿ(H_i, k).

    Returns:
        Класс Ĥⁿ(H, kG).

    Raises:
        InvalidOrbitException: Номер орбиты вне диапазона.
        SpaceMismatchException: Класс не из Ĥ*(H_i, k) контекста.
    """
    context.check_local(i, alpha)
    pushed = theta_push(context.orbit(i).representative, alpha, context.module)
    return corestriction(pushed, context.whole)


def assemble_decomposed(context: DecompositionContext, decomposed: DecomposedClass) -> CohomologyClass:
    """Обратное к decompose: Σᵢ ψ_i(αᵢ)."""
    total = context.space(decomposed.degree).zero()
    for i, component in enumerate(decomposed.components):
        total = total + assemble(context, i, component)
    return total


def _double_cosets(context: DecompositionContext, i: int, j: int, choice: RepresentativeChoice) -> list[int]:
    left, right = context.orbit(i).stabilizer, context.orbit(j).stabilizer
    reps = double_coset_reps(left, right, context.whole)
    if choice == RepresentativeChoice.LEAST:
        return reps
    return [max(double_coset(left, x, right)) for x in reps]


def _check_double_cosets(context: DecompositionContext, i: int, j: int, reps: list[int]) -> None:
    left, right = context.orbit(i).stabilizer, context.orbit(j).stabilizer
    covered: set[int] = set()
    for x in reps:
        coset = double_coset(left, x, right)
        if coset & covered:
            raise InvalidDoubleCosetsException(
                key="decomp.errors.invalid_double_cosets",
                fallback=f"Element {x} repeats a double coset of {left.describe()}\\H/{right.describe()}",
            )
        covered |= coset
    if len(covered) != context.actor.order:
        raise InvalidDoubleCosetsException(
            key="decomp.errors.invalid_double_cosets",
            fallback=f"Representatives do not cover {left.describe()}\\H/{right.describe()}",
        )


def _datum(
    context: DecompositionContext, i: int, j: int, x: int, choice: RepresentativeChoice
) -> OrbitProductDatum:
    datum = locate_product_datum(context.action, context.representatives, context.stabilizers, i, j, x)
    if choice == RepresentativeChoice.LEAST:
        return datum
    # y пробегает смежный класс H_k·y
    actor = context.actor
    h = max(context.orbit(datum.k).stabilizer.members, key=lambda member: actor.mul(member, datum.y))
    return OrbitProductDatum(
        i=i, j=j, x=x, k=datum.k, y=actor.mul(h, datum.y), subgroup=datum.subgroup.conjugate(h)
    )


def product_summand(
    context: DecompositionContext, datum: OrbitProductDatum, alpha: CohomologyClass, beta: CohomologyClass
) -> ProductSummand:
    """Слагаемое ψ_k(cor^{H_k}_V(res^{^yH_i}_V y*α ⌣ res^{^{yx}H_j}_V (yx)*β))."""
    y, yx = datum.y, context.actor.mul(datum.y, datum.x)
    left = restriction(conjugation(y, alpha), datum.subgroup)
    right = restriction(conjugation(yx, beta), datum.subgroup)
    local = corestriction(cup(left, right), context.orbit(datum.k).stabilizer)
    return ProductSummand(
        x=datum.x, k=datum.k, y=y, subgroup=datum.subgroup, local=local, value=assemble(context, datum.k, local)
    )


def product_formula(
    context: DecompositionContext,
    i: int,
    alpha: CohomologyClass,
    j: int,
    beta: CohomologyClass,
    choice: RepresentativeChoice = RepresentativeChoice.LEAST,
    double_cosets: list[int] | None = None,
) -> ProductTrace:
    """Функция вычисления ψ_i(α) ⌣ ψ_j(β) суммой по двойным смежным классам H_i\\H/H_j.

    Процесс включает:
    1. Выбор представителей x двойных смежных классов
    2. Для каждого x поиск орбиты k, элемента y и подгруппы V = ^{yx}H_j ∩ ^yH_i
    3. Произведение ограничений сопряжённых классов на V, коограничение в H_k и ψ_k
    4. Сумму слагаемых в порядке x

    Args:
        context: Контекст разложения.
        i: Орбита левого сомножителя.
        alpha: Класс Ĥᵐ(H_i, k).
        j: Орбита правого сомножителя.
        beta: Класс Ĥⁿ(H_j, k).
        choice: Выбор представителей x и y (сумма от него не зависит).
        double_cosets: Явный набор представителей двойных смежных классов.

    Returns:
        Сумма в Ĥ^{m+n}(H, kG) и слагаемые по x.

    Raises:
        InvalidOrbitException: Номер орбиты вне диапазона.
        SpaceMismatchException: Классы не из Ĥ*(H_i, k) и Ĥ*(H_j, k).
        InvalidDoubleCosetsException: Явный набор не является системой представителей.
        WindowExhaustedException: Степень m + n вне окна.
        ProductDatumInconsistentException: V не содержится в H_k.
    """
    context.check_local(i, alpha)
    context.check_local(j, beta)
    if double_cosets is None:
        double_cosets = _double_cosets(context, i, j, choice)
    else:
        _check_double_cosets(context, i, j, double_cosets)
    summands = tuple(
        product_summand(context, _datum(context, i, j, x, choice), alpha, beta) for x in double_cosets
    )
    total = context.space(alpha.degree + beta.degree).zero()
    for summand in summands:
        total = total + summand.value
    logger.debug(
        f"ψ_{i}·ψ_{j} in degree {total.degree}: {len(summands)} double cosets, "
        f"{sum(not summand.value.is_zero() for summand in summands)} nonzero"
    )
    return ProductTrace(i=i, j=j, total=total, summands=summands)


def decomposed_product(
    context: DecompositionContext, left: DecomposedClass, right: DecomposedClass
) -> CohomologyClass:
    """Произведение классов, заданных разложениями, билинейно по формуле для пар орбит."""
    total = context.space(left.degree + right.degree).zero()
    for i, alpha in enumerate(left.components):
        if alpha.is_zero():
            continue
        for j, beta in enumerate(right.components):
            if beta.is_zero():
                continue
            total = total + product_formula(context, i, alpha, j, beta).total
    return total


def module_action(
    context: DecompositionContext, alpha: CohomologyClass, j: int, beta: CohomologyClass
) -> CohomologyClass:
    """Действие Ĥ*(H, k) на слагаемом орбиты j: ψ_1(α) ⌣ ψ_j(β) = ψ_j(res^H_{H_j}(α) ⌣ β).

    Args:
        context: Контекст разложения.
        alpha: Класс Ĥᵐ(H, k).
        j: Номер орбиты.
        beta: Класс Ĥⁿ(H_j, k).

    Returns:
        Класс Ĥ^{m+n}(H, kG).
    """
    context.check_local(0, alpha)
    context.check_local(j, beta)
    restricted = restriction(alpha, context.orbit(j).stabilizer)
    return assemble(context, j, cup(restricted, beta))


def direct_oracle_product(context: DecompositionContext, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Произведение в Ĥ*(H, kG) напрямую: cup со спариванием умножения kG ⊗ kG → kG.

    Raises:
        SpaceMismatchException: Классы не из Ĥ*(H, kG) контекста.
        WindowExhaustedException: Степень произведения вне окна.
    """
    context.check_global(a)
    context.check_global(b)
    return cup(a, b, context.pairing)


def center_element(context: DecompositionContext, zeta: CohomologyClass) -> dict[str, int]:
    """Представитель класса степени 0 как элемент центра kG: метка элемента ↦ коэффициент.

    Raises:
        NotInDegreeZeroException: Степень класса не 0.
    """
    context.check_global(zeta)
    if zeta.degree != 0:
        raise NotInDegreeZeroException(
            key="decomp.errors.not_in_degree_zero",
            fallback=f"Class of degree {zeta.degree} has no central element",
        )
    target = context.action.target
    values = zeta.representative.reshape(-1, target.order)[0]
    return {target.label(g): int(c) for g, c in enumerate(values) if c}
