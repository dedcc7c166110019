import logging

import numpy as np

from .common import build_job_context, load_group, report_meta
from ..constants import ORACLE_DEGREE_BOUND
from ...decomp import DecompositionContext, assemble, direct_oracle_product, product_formula
from ...props import sample_cases
from ...types import Degree
from ....config import SAMPLED_CHECKS
from ....schemas.jobs import CheckSchema, JobSpecSchema, ReportSchema

logger = logging.getLogger(__name__)


def _degree_check(context: DecompositionContext, m: Degree, n: Degree, rng: np.random.Generator) -> CheckSchema:
    """Сверка ψ_i(α)·ψ_j(β) по формуле с прямым cup-произведением на базисных классах степеней m и n."""
    orbits = range(len(context.orbits))
    cases = [
        (i, a, j, b)
        for i in orbits
        for j in orbits
        for a in range(context.local_space(i, m).dim)
        for b in range(context.local_space(j, n).dim)
    ]
    sampled = sample_cases(cases, rng, SAMPLED_CHECKS)
    name = f"formula vs oracle, degrees ({m}, {n})"
    for i, a, j, b in sampled:
        alpha = context.local_space(i, m).basis_class(a)
        beta = context.local_space(j, n).basis_class(b)
        formula = product_formula(context, i, alpha, j, beta).total
        oracle = direct_oracle_product(context, assemble(context, i, alpha), assemble(context, j, beta))
        if formula != oracle:
            logger.warning(f"Product formula differs from the oracle at orbits ({i}, {j}), degrees ({m}, {n})")
            values = f"{formula.coordinates.tolist()} != {oracle.coordinates.tolist()}"
            return CheckSchema(name=name, passed=False, detail=f"orbits ({i}, {j}), basis ({a}, {b}): {values}")
    return CheckSchema(name=name, passed=True, detail=f"{len(sampled)} products")


def oracle_checks(context: DecompositionContext, window: int, seed: int) -> list[CheckSchema]:
    """Функция сверки формулы произведения с прямым cup-произведением.

    Степени |m|, |n| ≤ min(W, 2) с |m + n| ≤ W; при большом числе пар базисных классов пары выбираются по зерну.

    Args:
        context: Контекст разложения.
        window: Граница степеней W.
        seed: Зерно выборки.

    Returns:
        Сверка по каждой паре степеней.
    """
    rng = np.random.default_rng(seed)
    bound = min(window, ORACLE_DEGREE_BOUND)
    degrees = range(-bound, bound + 1)
    return [_degree_check(context, m, n, rng) for m in degrees for n in degrees if abs(m + n) <= window]


class OracleCheckService:
    """Сервис сверки формулы произведения по двойным смежным классам с прямым оракулом."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        group = load_group(job)
        checks = oracle_checks(build_job_context(job, group), job.window, job.seed)
        return ReportSchema(
            meta=report_meta(job, group), passed=all(check.passed for check in checks), checks=checks
        )
