from typing import Any

from pydantic import BaseModel

from .schemas import ErrorCode


def _jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, list | tuple):
        return [_jsonable(item) for item in value]
    return value


class AppException(Exception):
    """Базовое исключение приложения: код выхода CLI, код ошибки, ключ локализации и английский fallback."""

    exit_code: int = 4
    error_code: str = ErrorCode.INTERNAL_ERROR

    def __init__(
        self,
        key: str | None = None,
        error_code: str | None = None,
        exit_code: int | None = None,
        details: Any = None,
        translation_params: dict[str, Any] | None = None,
        fallback: str | None = None,
    ):
        self.key = key
        self.fallback = fallback if fallback is not None else key or "Unknown error"
        super().__init__(self.fallback)
        self.error_code = error_code or self.error_code
        self.exit_code = self.exit_code if exit_code is None else exit_code
        self.details = details
        self.translation_params = dict(translation_params or {})

    def get_report_content(self) -> dict:
        """Метод формирования документа ошибки {code, message, details}; модели pydantic выгружаются в JSON-вид."""
        return {"code": str(self.error_code), "message": self.fallback, "details": _jsonable(self.details)}


class UnsupportedLocaleException(AppException):
    """Неподдерживаемая локаль в TATEHH_LOCALE (2)."""

    exit_code: int = 2
    error_code: str = ErrorCode.VALIDATION_ERROR
