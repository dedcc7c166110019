from .common import job_backend, load_group, property_schemas, report_meta
from ...props import IDENTITY_DEGREES, PropertySuite
from ....schemas.jobs import JobSpecSchema, ReportSchema


class PropsService:
    """Сервис набора тождеств res, cor, g*, θ_a*, π_a* и структурных свойств."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод запуска набора тождеств в степенях IDENTITY_DEGREES, усечённых до [-W, W].

        Args:
            job: Задание.

        Returns:
            Отчёт с вердиктом по каждому тождеству.
        """
        group = load_group(job)
        degrees = range(max(-job.window, IDENTITY_DEGREES.start), min(job.window + 1, IDENTITY_DEGREES.stop))
        verdicts = PropertySuite(group, job.prime, degrees, job_backend(job), job.seed).run()
        return ReportSchema(
            meta=report_meta(job, group),
            passed=all(verdict.passed for verdict in verdicts),
            properties=property_schemas(verdicts),
        )
