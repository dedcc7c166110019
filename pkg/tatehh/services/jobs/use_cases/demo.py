import logging

from .common import (
    dimension_rows,
    job_backend,
    nilpotency_schemas,
    presentation_schema,
    relation_schemas,
    report_meta,
)
from .oracle import oracle_checks
from ..constants import (
    DEMO_DIMENSION_DEGREES,
    DEMO_DIMENSIONS,
    DEMO_GENERATOR_DEGREES,
    DEMO_GROUP,
    DEMO_INVERTIBLE,
    DEMO_PRIME,
    DEMO_WINDOW,
)
from ...decomp import DecompositionContext, assemble_decomposed, build_context, decompose
from ...groups import resolve_group
from ...resolutions import default_window
from ...ringpres import (
    S3_IDEMPOTENT_RELATION,
    S3_NILPOTENT_EXPONENTS,
    S3_RELATIONS,
    Naming,
    NilpotencyVerdict,
    extract,
    radical_report,
    verify_relations,
)
from ....schemas.jobs import CheckSchema, JobSpecSchema, ReportSchema

logger = logging.getLogger(__name__)


def _round_trip(context: DecompositionContext) -> CheckSchema:
    name = "decomposition round trip"
    checked = 0
    for n in DEMO_DIMENSION_DEGREES:
        space = context.space(n)
        for index in range(space.dim):
            zeta = space.basis_class(index)
            if assemble_decomposed(context, decompose(context, zeta)) != zeta:
                return CheckSchema(name=name, passed=False, detail=f"basis class {index} in degree {n}")
            checked += 1
    return CheckSchema(name=name, passed=True, detail=f"{checked} basis classes")


def _radical(verdicts: list[NilpotencyVerdict]) -> CheckSchema:
    exponents = {verdict.name: verdict.exponent for verdict in verdicts}
    expected = {**S3_NILPOTENT_EXPONENTS, **{name: None for name in DEMO_INVERTIBLE}}
    wrong = {name: exponents.get(name) for name, exponent in expected.items() if exponents.get(name) != exponent}
    if wrong:
        return CheckSchema(name="nilpotent generators", passed=False, detail=f"unexpected exponents {wrong}")
    detail = ", ".join(f"{name}^{exponent} = 0" for name, exponent in S3_NILPOTENT_EXPONENTS.items())
    return CheckSchema(name="nilpotent generators", passed=True, detail=detail)


class DemoS3Service:
    """Сервис воспроизведения кольца ĤH*(kS₃, kS₃) в характеристике 3."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод сквозной проверки для S₃ над F_3.

        Процесс включает:
        1. Размерности ĤHⁿ для n ∈ [-4, 4] и разложение по централизаторам
        2. Обратимость разложения на базисных классах
        3. Сверку формулы произведения с прямым оракулом
        4. Именованные образующие, одиннадцать соотношений и E₂² = E₂ - 1
        5. Нильпотентность C, W₁, W₂, W₂⁻¹ и обратимость z
        6. Степени образующих жадного выбора

        Args:
            job: Задание; группа и характеристика фиксированы, окно не меньше DEMO_WINDOW.

        Returns:
            Отчёт; passed ложно при любом расхождении.
        """
        group = resolve_group(DEMO_GROUP)
        window = max(job.window, DEMO_WINDOW)
        context = build_context(group, DEMO_PRIME, default_window(window), job_backend(job))

        dimensions = dimension_rows(context, DEMO_DIMENSION_DEGREES)
        totals = tuple(row.total for row in dimensions)
        checks = [
            CheckSchema(name="dimensions", passed=totals == DEMO_DIMENSIONS, detail=f"{list(totals)}"),
            _round_trip(context),
            *oracle_checks(context, window, job.seed),
        ]

        named = extract(context, Naming.NAMED)
        relations = relation_schemas(verify_relations(named, [*S3_RELATIONS, S3_IDEMPOTENT_RELATION]))
        nilpotency = radical_report(named)
        checks.append(_radical(nilpotency))

        generic = extract(context)
        checks.append(
            CheckSchema(
                name="generator degrees",
                passed=generic.degrees == DEMO_GENERATOR_DEGREES,
                detail=", ".join(f"{g.name}:{g.degree}" for g in generic.generators),
            )
        )

        passed = all(check.passed for check in checks) and all(verdict.passed for verdict in relations)
        logger.info(f"S3 reproduction {'passed' if passed else 'failed'} in window {context.window}")
        return ReportSchema(
            meta=report_meta(job, group, prime=DEMO_PRIME, window=window),
            passed=passed,
            dimensions=dimensions,
            presentation=presentation_schema(named),
            relations=relations,
            nilpotency=nilpotency_schemas(nilpotency),
            checks=checks,
        )
