"""Точка входа CLI: tatehh <command> [--group G] [--prime p] [--window W] ..."""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from .config import DEFAULT_LOCALE, LOCALE, LOG_LEVEL, SUPPORTED_LOCALES
from .core.handlers import app_exception_handler, unhandled_exception_handler, validation_error_details
from .core.localizer import Localizer
from .core.logging import setup_logging
from .exceptions import AppException, UnsupportedLocaleException
from .schemas.jobs import JobCommand, JobSpecSchema, OutputFormat
from .services.jobs import JobService
from .services.jobs.exceptions import InvalidJobException, JobVerificationFailedException


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tatehh",
        description="Tate cohomology of finite groups and the Tate-Hochschild ring of group algebras over F_p",
    )
    parser.add_argument("command", choices=JobCommand.values(), help="Command to run")
    parser.add_argument("--group", help="Built-in group (C1..C12, C2xC2, S3, D4, Q8) or path to a JSON group spec")
    parser.add_argument("--prime", type=int, help="Characteristic p")
    parser.add_argument("--window", type=int, help="Degree bound W, reports cover n in [-W, W]")
    parser.add_argument("--format", dest="output_format", choices=OutputFormat.values(), help="Report format")
    parser.add_argument("--backend", choices=["auto", "generic", "reduced", "cyclic"], help="Complete resolution")
    parser.add_argument("--relations", type=Path, help="Relation file for verify, one relation per line")
    parser.add_argument("--seed", type=int, help="Seed for sampled checks")
    parser.add_argument("--naming", choices=["generic", "named"], help="Generator naming for ring and verify")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="Logging level, logs go to stderr")
    return parser


def parse_job(namespace: argparse.Namespace) -> JobSpecSchema:
    """Функция построения задания из аргументов командной строки.

    Незаданные флаги берутся из значений по умолчанию схемы.

    Raises:
        InvalidJobException: Аргументы не проходят валидацию схемы.
    """
    fields = {key: value for key, value in vars(namespace).items() if key != "log_level" and value is not None}
    try:
        return JobSpecSchema(**fields)
    except ValidationError as e:
        raise InvalidJobException(
            key="jobs.errors.invalid_job",
            fallback=f"Invalid job: {e.error_count()} validation error(s)",
            details=validation_error_details(e),
            translation_params={"count": e.error_count()},
        ) from e


def _check_locale() -> None:
    if LOCALE not in SUPPORTED_LOCALES:
        raise UnsupportedLocaleException(
            key="common.errors.unsupported_locale",
            fallback=f"Locale {LOCALE!r} is not supported, use one of {', '.join(SUPPORTED_LOCALES)}",
            translation_params={"locale": LOCALE, "default": DEFAULT_LOCALE},
        )


def run(job: JobSpecSchema, localizer: Localizer | None = None) -> int:
    """Функция выполнения задания: отчёт в stdout, код выхода 0 или 1 при невыполненных проверках."""
    service = JobService()
    report = service.exec(job)
    sys.stdout.write(service.render(report, job.output_format) + "\n")
    if report.passed:
        return 0
    failure = JobVerificationFailedException(
        key="jobs.errors.verification_failed",
        fallback=f"{job.command} found failing checks",
        translation_params={"command": str(job.command)},
    )
    return app_exception_handler(failure, localizer, structured=False)


def main(argv: Sequence[str] | None = None) -> int:
    """Функция запуска CLI.

    Коды выхода: 0 успех, 1 невыполненная проверка, 2 некорректный ввод, 3 превышен бюджет размера,
    4 внутренняя ошибка.

    Args:
        argv: Аргументы командной строки без имени программы.

    Returns:
        Код выхода.
    """
    namespace = build_parser().parse_args(argv)
    setup_logging(namespace.log_level)
    structured = namespace.output_format == OutputFormat.STRUCTURED
    localizer = Localizer()
    try:
        _check_locale()
        return run(parse_job(namespace), localizer)
    except AppException as e:
        return app_exception_handler(e, localizer, structured)
    except Exception as e:
        return unhandled_exception_handler(e, structured)


if __name__ == "__main__":
    sys.exit(main())
