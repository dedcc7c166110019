from pathlib import Path
from typing import TYPE_CHECKING, NoReturn

from .exceptions import ReportRenderFailedException, UnreadableFileException

if TYPE_CHECKING:
    from .renderer import TemplateRendererSettings


class JobsServiceValidators:
    """Валидаторы для сервиса заданий."""

    @classmethod
    def validate_relations_file(cls, path: Path) -> None | NoReturn:
        """Метод валидации файла соотношений.

        Args:
            path: Путь к файлу.

        Raises:
            UnreadableFileException: Если файла нет или это не файл.
        """
        if not path.is_file():
            raise UnreadableFileException(
                key="jobs.errors.relations_file_missing",
                fallback=f"Relations file {path} does not exist",
                translation_params={"path": str(path)},
            )


class TemplateRendererSettingsValidator:
    """Валидатор настроек рендерера шаблонов."""

    @classmethod
    def validate(cls, settings: "TemplateRendererSettings") -> None | NoReturn:
        """Метод валидации настроек рендерера шаблонов.

        Raises:
            ReportRenderFailedException: При невалидном пути к директории шаблонов.
        """
        cls._validate_templates_dir(settings.templates_dir)

    @classmethod
    def _validate_templates_dir(cls, templates_dir: Path) -> None | NoReturn:
        if not templates_dir.is_dir():
            raise ReportRenderFailedException(
                key="jobs.errors.templates_dir_missing",
                fallback=f"Templates directory {templates_dir} does not exist",
                translation_params={"path": str(templates_dir)},
            )
