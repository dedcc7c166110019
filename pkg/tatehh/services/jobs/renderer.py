import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template, TemplateError, TemplateNotFound

from .constants import REPORT_TEMPLATE, TEMPLATES_DIR
from .exceptions import ReportRenderFailedException
from .types import TemplateName
from .validators import TemplateRendererSettingsValidator
from ...schemas.jobs import ReportSchema

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class TemplateRendererSettings:
    """Каталог текстовых шаблонов отчётов; проверяется при создании."""

    templates_dir: Path = field(default=TEMPLATES_DIR)

    def __post_init__(self) -> None:
        TemplateRendererSettingsValidator.validate(self)


def build_environment(settings: TemplateRendererSettings) -> Environment:
    """Окружение Jinja2 для текстовых отчётов: без экранирования, неизвестные переменные являются ошибкой."""
    return Environment(
        loader=FileSystemLoader(settings.templates_dir),
        autoescape=False,
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=False,
    )


class TemplateRenderer:
    """Отрисовка отчётов по Jinja2-шаблонам; окружение создаётся при первом обращении, шаблоны кэшируются."""

    def __init__(self, settings: TemplateRendererSettings | None = None) -> None:
        self._settings = settings or TemplateRendererSettings()
        self._templates: dict[TemplateName, Template] = {}

    @cached_property
    def env(self) -> Environment:
        return build_environment(self._settings)

    def _template(self, name: TemplateName) -> Template:
        if name not in self._templates:
            logger.debug(f"Loading report template {name} from {self._settings.templates_dir}")
            self._templates[name] = self.env.get_template(name)
        return self._templates[name]

    def render(self, template_name: TemplateName, context: Mapping[str, Any]) -> str:
        """Метод отрисовки шаблона.

        Args:
            template_name: Имя файла шаблона в каталоге настроек.
            context: Переменные шаблона.

        Returns:
            Текст отчёта.

        Raises:
            ReportRenderFailedException: Шаблон не найден или не отрисовывается.
        """
        try:
            return self._template(template_name).render(context)
        except TemplateNotFound as e:
            raise ReportRenderFailedException(
                key="jobs.errors.template_not_found",
                fallback=f"Report template '{template_name}' not found",
                translation_params={"template_name": template_name},
            ) from e
        except TemplateError as e:
            raise ReportRenderFailedException(
                key="jobs.errors.render_failed",
                fallback=f"Failed to render report template {template_name}: {e}",
            ) from e

    def render_report(self, report: ReportSchema) -> str:
        return self.render(REPORT_TEMPLATE, {"report": report})
