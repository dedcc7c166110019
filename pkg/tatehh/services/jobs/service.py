import logging

from .renderer import TemplateRenderer
from .use_cases import (
    DemoS3Service,
    DimsService,
    OracleCheckService,
    PropsService,
    RingService,
    TateService,
    VerifyService,
)
from ...schemas.jobs import JobCommand, JobSpecSchema, OutputFormat, ReportSchema

logger = logging.getLogger(__name__)

USE_CASES = {
    JobCommand.DIMS: DimsService,
    JobCommand.TATE: TateService,
    JobCommand.RING: RingService,
    JobCommand.VERIFY: VerifyService,
    JobCommand.ORACLE_CHECK: OracleCheckService,
    JobCommand.PROPS: PropsService,
    JobCommand.DEMO_S3: DemoS3Service,
}


class JobService:
    """Сервис выполнения задания CLI и отрисовки отчёта."""

    def __init__(self, renderer: TemplateRenderer | None = None) -> None:
        self._renderer = renderer or TemplateRenderer()

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод выполнения задания.

        Args:
            job: Провалидированное задание.

        Returns:
            Отчёт; passed ложно, если какая-либо проверка не выполнена.

        Raises:
            AppException: Ошибки входных данных, бюджета размера и внутренние ошибки сервисов.
        """
        logger.info(f"Running {job.command} on {job.group} over F_{job.prime}, W = {job.window}")
        report = USE_CASES[job.command]().exec(job)
        logger.info(f"{job.command} finished, passed = {report.passed}")
        return report

    def render(self, report: ReportSchema, output_format: OutputFormat) -> str:
        """Метод отрисовки отчёта: текст по шаблону или один JSON-документ."""
        if output_format == OutputFormat.STRUCTURED:
            return report.model_dump_json(indent=2)
        return self._renderer.render_report(report)
