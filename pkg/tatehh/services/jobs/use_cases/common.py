"""Общие части сценариев: группа и контекст задания, перевод результатов сервисов в схемы отчёта."""

from collections.abc import Iterable

from ...decomp import DecompositionContext, build_context
from ...groups import FiniteGroup, resolve_group
from ...props import PropertyVerdict
from ...resolutions import Backend, default_window, select_backend
from ...ringpres import NilpotencyVerdict, RelationVerdict, RingPresentation
from ...types import Degree
from ....schemas.jobs import (
    DimensionRowSchema,
    GeneratorSchema,
    JobSpecSchema,
    NilpotencySchema,
    PresentationSchema,
    PropertyVerdictSchema,
    RelationVerdictSchema,
    ReportMetaSchema,
)


def load_group(job: JobSpecSchema) -> FiniteGroup:
    return resolve_group(job.group)


def job_backend(job: JobSpecSchema) -> Backend:
    return Backend(job.backend)


def build_job_context(
    job: JobSpecSchema, group: FiniteGroup, largest_degree: Degree | None = None
) -> DecompositionContext:
    """Контекст G, действующей на себе сопряжением, в окне, где вычислимы все |n| ≤ W."""
    return build_context(group, job.prime, default_window(largest_degree or job.window), job_backend(job))


def report_meta(
    job: JobSpecSchema, group: FiniteGroup, prime: int | None = None, window: int | None = None
) -> ReportMetaSchema:
    prime = prime or job.prime
    return ReportMetaSchema(
        command=str(job.command),
        group=group.name,
        order=group.order,
        prime=prime,
        window=window or job.window,
        backend=str(select_backend(group, prime, job_backend(job))),
        seed=job.seed,
    )


def dimension_rows(context: DecompositionContext, degrees: Iterable[Degree]) -> list[DimensionRowSchema]:
    rows = []
    for n in degrees:
        local = context.local_dimensions(n)
        rows.append(DimensionRowSchema(degree=n, total=sum(local), orbits=list(local)))
    return rows


def presentation_schema(presentation: RingPresentation) -> PresentationSchema:
    return PresentationSchema(
        window=presentation.window,
        generators=[
            GeneratorSchema(
                name=generator.name,
                degree=generator.degree,
                origin=generator.origin,
                coordinates=[int(c) for c in generator.coordinates],
            )
            for generator in presentation.generators
        ],
        relations=[relation.text for relation in presentation.relations],
        aliases=sorted(presentation.aliases),
        complete=presentation.complete,
        note=presentation.note,
    )


def relation_schemas(verdicts: Iterable[RelationVerdict]) -> list[RelationVerdictSchema]:
    return [
        RelationVerdictSchema(
            relation=verdict.text, degree=verdict.degree, passed=verdict.passed, witness=list(verdict.witness)
        )
        for verdict in verdicts
    ]


def nilpotency_schemas(verdicts: Iterable[NilpotencyVerdict]) -> list[NilpotencySchema]:
    return [
        NilpotencySchema(
            name=verdict.name, degree=verdict.degree, exponent=verdict.exponent, checked_up_to=verdict.checked_up_to
        )
        for verdict in verdicts
    ]


def property_schemas(verdicts: Iterable[PropertyVerdict]) -> list[PropertyVerdictSchema]:
    return [
        PropertyVerdictSchema(
            name=verdict.name,
            family=str(verdict.family),
            passed=verdict.passed,
            checked=verdict.checked,
            total=verdict.total,
            detail=verdict.detail,
        )
        for verdict in verdicts
    ]
