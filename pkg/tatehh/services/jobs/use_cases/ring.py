import logging
from pathlib import Path

from .common import (
    build_job_context,
    load_group,
    nilpotency_schemas,
    presentation_schema,
    relation_schemas,
    report_meta,
)
from ..constants import RELATION_COMMENT_PREFIX
from ..exceptions import UnreadableFileException
from ..types import RelationText
from ..validators import JobsServiceValidators
from ...ringpres import Naming, extract, radical_report, verify_relations
from ....core.common import read_text_file
from ....schemas.jobs import JobSpecSchema, ReportSchema

logger = logging.getLogger(__name__)


def read_relations(path: Path) -> list[RelationText]:
    """Функция чтения файла соотношений: по одному на строку, пустые строки и строки с # пропускаются.

    Raises:
        UnreadableFileException: Файл не существует или не читается как текст.
    """
    JobsServiceValidators.validate_relations_file(path)
    try:
        content = read_text_file(path)
    except (OSError, UnicodeDecodeError) as e:
        raise UnreadableFileException(
            key="jobs.errors.relations_file_unreadable",
            fallback=f"Cannot read relations file {path}",
            translation_params={"path": str(path)},
        ) from e
    lines = (line.strip() for line in content.splitlines())
    return [line for line in lines if line and not line.startswith(RELATION_COMMENT_PREFIX)]


class RingService:
    """Сервис выделения представления ĤH*(kG, kG) в окне."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод выделения образующих и соотношений с проверкой собственных соотношений.

        Args:
            job: Задание.

        Returns:
            Отчёт с представлением, проверкой его соотношений и нильпотентностью образующих.

        Raises:
            WindowTooSmallException: Мономы не порождают компоненту окна.
            NamingUnavailableException: Именованные образующие недоступны для группы.
        """
        group = load_group(job)
        presentation = extract(build_job_context(job, group), Naming(job.naming))
        relations = relation_schemas(verify_relations(presentation))
        return ReportSchema(
            meta=report_meta(job, group),
            passed=all(verdict.passed for verdict in relations),
            presentation=presentation_schema(presentation),
            relations=relations,
            nilpotency=nilpotency_schemas(radical_report(presentation)),
        )


class VerifyService:
    """Сервис проверки соотношений из файла."""

    def exec(self, job: JobSpecSchema) -> ReportSchema:
        """Метод проверки соотношений из файла на образующих представления.

        Args:
            job: Задание с путём к файлу соотношений.

        Returns:
            Отчёт с вердиктом по каждой строке файла.

        Raises:
            UnreadableFileException: Файл не читается.
            RelationSyntaxException: Строка не разбирается.
            UnknownGeneratorException: Имя вне таблицы представления.
        """
        texts = read_relations(job.relations)
        group = load_group(job)
        presentation = extract(build_job_context(job, group), Naming(job.naming))
        relations = relation_schemas(verify_relations(presentation, texts))
        failed = [verdict.relation for verdict in relations if not verdict.passed]
        logger.info(f"Verified {len(relations)} relations on {group.name}, failed {failed}")
        return ReportSchema(
            meta=report_meta(job, group),
            passed=not failed,
            presentation=presentation_schema(presentation),
            relations=relations,
        )
