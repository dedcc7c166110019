"""Выделение представления кольца ĤH*(kG, kG) образующими и соотношениями в пределах окна.

Образующие выбираются жадно по слоям ψ_i; соотношения образуют базис ядра отображения вычисления
градуированно-коммутативных мономов ограниченной длины в каждой степени окна.
"""

import logging
from dataclasses import dataclass

from .engine import GradedRing, RingEngine
from .exceptions import WindowTooSmallException
from .named import named_generators
from .relations import render_relation
from .types import Generator, Naming, ProductMethod, Relation, RingPresentation, Term
from ..decomp import DecompositionContext, assemble
from ..linalg import FpMatrix, in_span, kernel_basis, rank
from ..maps import restriction_map
from ..resolutions import CohomologyClass
from ..types import Degree
from ...config import MONOMIAL_LENGTH_BOUND

logger = logging.getLogger(__name__)

WINDOW_NOTE = "Valid within the computed window only"
ZERO_RING_RELATION = Relation(degree=0, terms=(Term(1, ()),), text="1 = 0")


@dataclass(frozen=True)
class LayerGenerator:
    name: str
    degree: Degree
    element: CohomologyClass


def _words(
    degrees: list[Degree], target: Degree, bound: int, ring: GradedRing, odd_squares: bool
) -> list[tuple[int, ...]]:
    """Неубывающие последовательности индексов со степенью target.

    Образующих ненулевой степени и образующих степени 0 в слове не больше bound каждых; все частичные степени
    вычислимы; при odd_squares=False образующие нечётной степени не повторяются.
    """
    words: list[tuple[int, ...]] = []

    def walk(start: int, prefix: tuple[int, ...], partial: Degree, graded: int, flat: int) -> None:
        if partial == target:
            words.append(prefix)
        for index in range(start, len(degrees)):
            degree = degrees[index]
            if (graded if degree else flat) == bound:
                continue
            if not odd_squares and degree % 2 and prefix and prefix[-1] == index:
                continue
            following = partial + degree
            if ring.computable(following):
                walk(index, prefix + (index,), following, graded + bool(degree), flat + (not degree))

    walk(0, (), 0, 0, 0)
    return words


def _evaluations(
    ring: GradedRing, elements: list[CohomologyClass], words: list[tuple[int, ...]], namespace: str, size: int
) -> FpMatrix:
    columns = [ring.product([elements[i] for i in word], key=(namespace, *word)).coordinates for word in words]
    return FpMatrix.from_columns(ring.p, columns, size)


def _spanned(
    ring: GradedRing, elements: list[CohomologyClass], bound: int, namespace: str, vector: CohomologyClass
) -> bool:
    degrees = [element.degree for element in elements]
    words = _words(degrees, vector.degree, bound, ring, ring.p == 2)
    matrix = _evaluations(ring, elements, words, namespace, vector.space.dim)
    return in_span(matrix, vector.coordinates)


def _layer_name(prefix: str, degree: Degree, taken: list[LayerGenerator]) -> str:
    base = f"{prefix}{degree}" if degree >= 0 else f"{prefix}m{-degree}"
    count = sum(1 for generator in taken if generator.name == base or generator.name.startswith(f"{base}_"))
    return base if count == 0 else f"{base}_{count + 1}"


def layer_generators(ring: GradedRing, bound: int, namespace: str, prefix: str = "u") -> list[LayerGenerator]:
    """Функция жадного выбора образующих кольца Ĥ*(V, k).

    Процесс включает:
    1. Неотрицательные степени по возрастанию: базисные классы вне линейной оболочки мономов
    2. Обратные к образующим положительной степени, если они лежат в окне
    3. Отрицательные степени по возрастанию модуля

    Args:
        ring: Кольцо когомологий.
        bound: Наибольшая длина монома.
        namespace: Ключ кэша произведений.
        prefix: Префикс имён.

    Returns:
        Образующие в порядке выбора.
    """
    generators: list[LayerGenerator] = []
    if ring.unit.is_zero():
        return generators

    def extend(n: Degree) -> None:
        space = ring.space(n)
        for index in range(space.dim):
            candidate = space.basis_class(index)
            if not _spanned(ring, [g.element for g in generators], bound, namespace, candidate):
                generators.append(LayerGenerator(_layer_name(prefix, n, generators), n, candidate))

    for n in range(0, ring.hi):
        if ring.computable(n):
            extend(n)
    for generator in list(generators):
        if generator.degree <= 0:
            continue
        inverse = ring.inverse(generator.element)
        if inverse is not None:
            generators.append(LayerGenerator(f"{generator.name}inv", -generator.degree, inverse))
    for n in range(-1, ring.lo, -1):
        if ring.computable(n):
            extend(n)
    return generators


def _in_restriction_image(context: DecompositionContext, i: int, element: CohomologyClass) -> bool:
    res = restriction_map(context.local_space(0, element.degree), context.orbit(i).stabilizer)
    return in_span(res.matrix, element.coordinates)


def generic_generators(engine: RingEngine, bound: int = MONOMIAL_LENGTH_BOUND) -> list[Generator]:
    """Образующие по слоям: ψ_1 от образующих Ĥ*(H, k), затем ψ_i(1) и ψ_i(γ) вне образа ограничения."""
    context = engine.context
    generators: list[Generator] = []
    for layer in layer_generators(engine.local(context.whole), bound, "local-0"):
        generators.append(
            Generator(layer.name, layer.degree, assemble(context, 0, layer.element), f"psi_1({layer.name})")
        )
    for orbit in context.orbits[1:]:
        i = orbit.index
        local = engine.local(orbit.stabilizer)
        if local.unit.is_zero():
            continue
        idempotent = assemble(context, i, local.unit)
        elements = [generator.element for generator in generators]
        if not _spanned(engine.ring, elements, bound, "global", idempotent):
            generators.append(Generator(f"E{i + 1}", 0, idempotent, f"psi_{i + 1}(1)"))
        for layer in layer_generators(local, bound, f"local-{i}"):
            if _in_restriction_image(context, i, layer.element):
                continue
            generators.append(
                Generator(
                    f"W{i + 1}_{layer.name}",
                    layer.degree,
                    assemble(context, i, layer.element),
                    f"psi_{i + 1}({layer.name})",
                )
            )
    return generators


def _relations_and_deficits(
    ring: GradedRing, generators: list[Generator], bound: int, namespace: str
) -> tuple[list[Relation], dict[Degree, int]]:
    degrees = [generator.degree for generator in generators]
    elements = [generator.element for generator in generators]
    relations: list[Relation] = []
    deficits: dict[Degree, int] = {}
    for n in range(ring.lo + 1, ring.hi):
        space = ring.space(n)
        words = _words(degrees, n, bound, ring, ring.p == 2)
        matrix = _evaluations(ring, elements, words, namespace, space.dim)
        if rank(matrix) < space.dim:
            deficits[n] = space.dim - rank(matrix)
        if not words:
            continue
        kernel = kernel_basis(matrix)
        for column in range(kernel.cols):
            vector = kernel.column(column)
            terms = tuple(
                Term(int(c), tuple(generators[i].name for i in words[k])) for k, c in enumerate(vector) if c
            )
            relations.append(Relation(degree=n, terms=terms, text=render_relation(terms, ring.p)))
    return relations, deficits


def extract(
    context: DecompositionContext,
    naming: Naming = Naming.GENERIC,
    method: ProductMethod = ProductMethod.FORMULA,
    bound: int = MONOMIAL_LENGTH_BOUND,
) -> RingPresentation:
    """Функция выделения представления ĤH*(kG, kG) в окне контекста.

    Args:
        context: Контекст разложения.
        naming: Именование образующих.
        method: Способ умножения.
        bound: Наибольшая длина монома.

    Returns:
        Представление: образующие, соотношения, именованные классы.

    Raises:
        WindowTooSmallException: Мономы не порождают некоторую компоненту окна; частичное
            представление передаётся в details.
        NamingUnavailableException: Именование недоступно для группы.
    """
    if context.actor.order % context.p:
        logger.info(f"p = {context.p} does not divide |{context.actor.name}|, the ring is zero")
        return RingPresentation(
            group=context.actor.name,
            p=context.p,
            window=context.window,
            generators=(),
            relations=(ZERO_RING_RELATION,),
            engine=None,
            note=WINDOW_NOTE,
        )
    engine = RingEngine(context, method)
    if naming == Naming.NAMED:
        generators, aliases = named_generators(engine)
    else:
        generators, aliases = generic_generators(engine, bound), {}
    relations, deficits = _relations_and_deficits(engine.ring, generators, bound, "global")
    presentation = RingPresentation(
        group=context.actor.name,
        p=context.p,
        window=context.window,
        generators=tuple(generators),
        relations=tuple(relations),
        engine=engine,
        aliases=aliases,
        complete=not deficits,
        note=WINDOW_NOTE,
    )
    logger.info(
        f"Presentation of {context.actor.name} over F_{context.p}: generators "
        f"{[(g.name, g.degree) for g in generators]}, {len(relations)} relations"
    )
    if deficits:
        raise WindowTooSmallException(
            key="ringpres.errors.window_too_small",
            fallback=f"Monomials of the generators miss dimensions {deficits} in window {context.window}",
            details={
                "generators": [{"name": g.name, "degree": g.degree} for g in generators],
                "relations": [relation.text for relation in relations],
                "deficits": {str(n): d for n, d in deficits.items()},
            },
        )
    return presentation
