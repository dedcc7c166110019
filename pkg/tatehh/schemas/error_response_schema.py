from typing import Any

from pydantic import BaseModel, Field

from ..core.common import StringEnum


class ErrorCode(StringEnum):
    """Общие коды ошибок."""

    VALIDATION_ERROR = "VALIDATION_ERROR"  # Код выхода 2
    VERIFICATION_FAILED = "VERIFICATION_FAILED"  # Код выхода 1
    SIZE_BUDGET_EXCEEDED = "SIZE_BUDGET_EXCEEDED"  # Код выхода 3
    INTERNAL_ERROR = "INTERNAL_ERROR"  # Код выхода 4


class ErrorReportSchema(BaseModel):
    """Схема отчёта об ошибке."""

    code: str = Field(..., description="Код ошибки")
    message: str = Field(..., description="Сообщение об ошибке")
    details: Any | None = Field(None, description="Детали ошибки")
