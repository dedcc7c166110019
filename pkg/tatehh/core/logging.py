import logging
import sys
from typing import TextIO

LOG_FORMAT = "[%(levelname)s][%(name)s]:%(message)s"


def resolve_level(level: int | str) -> int:
    """Уровень логирования по числу или имени ("debug", "WARNING"); неизвестное имя даёт INFO."""
    if isinstance(level, int):
        return level
    # getLevelNamesMapping появился в 3.11; на 3.10 та же таблица лежит в logging._nameToLevel
    names = logging.getLevelNamesMapping() if hasattr(logging, "getLevelNamesMapping") else dict(logging._nameToLevel)
    return names.get(level.upper(), logging.INFO)


def setup_logging(
    level: int | str = logging.INFO, forma: str = LOG_FORMAT, stream: TextIO | None = None, **kwargs
) -> logging.Logger:
    """Функция настройки корневого логгера.

    Логи пишутся в stderr: stdout занят отчётами CLI.

    Args:
        level: Уровень логирования (число или имя уровня).
        forma: Формат сообщений лога.
        stream: Поток обработчика, по умолчанию sys.stderr на момент вызова.
        **kwargs: Дополнительные аргументы logging.basicConfig (например, force=True).

    Returns:
        Логгер текущего модуля.
    """
    handler = logging.StreamHandler(stream or sys.stderr)
    logging.basicConfig(level=resolve_level(level), format=forma, handlers=[handler], **kwargs)
    return logging.getLogger(__name__)
