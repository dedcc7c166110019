from .renderer import TemplateRenderer, TemplateRendererSettings
from .service import USE_CASES, JobService

__all__ = (
    "JobService",
    "TemplateRenderer",
    "TemplateRendererSettings",
    "USE_CASES",
)
