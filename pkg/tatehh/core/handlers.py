"""Обработчики ошибок CLI: локализованное сообщение в stderr, документ ошибки в stdout в режиме structured."""

import json
import logging
import sys
from typing import TextIO

from pydantic import ValidationError

from .localizer import Localizer, localize_key
from ..config import LOCALE
from ..exceptions import AppException
from ..schemas import ErrorCode, ErrorReportSchema

logger = logging.getLogger(__name__)

INTERNAL_EXIT_CODE = 4


def localized_message(exc: AppException, localizer: Localizer | None, locale: str = LOCALE) -> str:
    params = {k: str(v) for k, v in exc.translation_params.items()}
    return localize_key(localizer, exc.key, exc.fallback, locale, **params)


def app_exception_handler(
    exc: AppException,
    localizer: Localizer | None,
    structured: bool,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Универсальный обработчик для всех AppException.

    Args:
        exc: Исключение приложения.
        localizer: Локализатор сообщений.
        structured: Печатать документ ошибки в stdout.
        stdout: Поток отчёта (по умолчанию sys.stdout).
        stderr: Поток сообщений (по умолчанию sys.stderr).

    Returns:
        Код выхода исключения.
    """
    if exc.exit_code >= INTERNAL_EXIT_CODE:
        logger.error(f"App error: {exc.fallback}", exc_info=True)
    else:
        logger.warning(f"App warning: {exc.fallback}")

    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    content = exc.get_report_content()
    content["message"] = localized_message(exc, localizer)
    stderr.write(f"error [{content['code']}]: {content['message']}\n")
    if structured:
        stdout.write(ErrorReportSchema(**content).model_dump_json(indent=2) + "\n")
    return exc.exit_code


def unhandled_exception_handler(
    exc: Exception, structured: bool, stdout: TextIO | None = None, stderr: TextIO | None = None
) -> int:
    """Обработчик необработанных исключений: код INTERNAL_ERROR и выход 4."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    report = ErrorReportSchema(code=ErrorCode.INTERNAL_ERROR, message="Internal error", details=None)
    stderr.write(f"error [{report.code}]: {type(exc).__name__}: {exc}\n")
    if structured:
        stdout.write(report.model_dump_json(indent=2) + "\n")
    return INTERNAL_EXIT_CODE


def validation_error_details(error: ValidationError) -> list[dict]:
    """Ошибки валидации pydantic в JSON-совместимом виде."""
    return json.loads(error.json(include_url=False, include_context=False))
