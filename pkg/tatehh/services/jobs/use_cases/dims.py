import logging

from .common import build_job_context, dimension_rows, job_backend, load_group, report_meta
from ...resolutions import TateWorkspace, default_window
from ....schemas.jobs import DimensionRowSchema, JobSpecSchema, ReportSchema

logger = logging.getLogger(__name__)


class DimsService:
    """Сервис таблицы размерностей ĤHⁿ(kG, kG) = Ĥⁿ(G, kG) по классам сопряжённости."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод вычисления dim ĤHⁿ и размерностей Ĥⁿ централизаторов для n ∈ [-W, W].

        Args:
            job: Задание.

        Returns:
            Отчёт с таблицей размерностей.
        """
        group = load_group(job)
        context = build_job_context(job, group)
        rows = dimension_rows(context, range(-job.window, job.window + 1))
        logger.info(f"Dimensions of {group.name} over F_{job.prime}: {[row.total for row in rows]}")
        return ReportSchema(meta=report_meta(job, group), dimensions=rows)


class TateService:
    """Сервис размерностей Ĥⁿ(G, k) с тривиальными коэффициентами."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        group = load_group(job)
        workspace = TateWorkspace(group, job.prime, default_window(job.window), job_backend(job))
        rows = [
            DimensionRowSchema(degree=n, total=workspace.dimension(n)) for n in range(-job.window, job.window + 1)
        ]
        return ReportSchema(meta=report_meta(job, group), dimensions=rows)
