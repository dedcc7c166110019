#!/usr/bin/env python3
"""
Invoke tasks for the tatehh project.
"""

import sys
from pathlib import Path

from invoke import task

from tatehh.core.logging import setup_logging

logger = setup_logging()

SOURCES = ["tatehh/", "tasks.py"]


def _run_safe_command(ctx, cmd, **kwargs):
    """Запуск команды через /bin/sh; ошибка логируется и пробрасывается дальше."""
    line = " ".join(map(str, cmd)) if isinstance(cmd, list) else cmd
    try:
        return ctx.run(line, shell="/bin/sh", **kwargs)
    except Exception as e:
        logger.error(f"❌ Команда завершилась с ошибкой: {line}: {e}")
        raise


def _project_env():
    return {"PYTHONPATH": str(Path(__file__).parent.absolute())}


@task(name="tests")
def tests(ctx, pattern="*test*.py"):
    """Запуск тестов.

    Args:
        ctx: Контекст invoke.
        pattern: Шаблон имён тестовых модулей.
    """
    logger.info("🧪 Запуск тестов...")
    cmd = [sys.executable, "-m", "unittest", "discover", "-s", "tatehh/tests", "-t", ".", f"--pattern={pattern}"]
    _run_safe_command(ctx, cmd)


@task(name="lint")
def run_lint(ctx):
    """Проверка кода линтером.

    Args:
        ctx: Контекст invoke.
    """
    logger.info("🔍 Проверка кода линтером...")
    _run_safe_command(ctx, ["ruff", "check", *SOURCES])


@task(name="format")
def format_code(ctx):
    """Форматирование кода.

    Args:
        ctx: Контекст invoke.
    """
    logger.info("✨ Форматирование кода...")
    _run_safe_command(ctx, ["ruff", "format", *SOURCES])


@task(name="demo")
def demo(ctx, structured=False):
    """Воспроизведение кольца ĤH*(kS₃, kS₃) в характеристике 3.

    Args:
        ctx: Контекст invoke.
        structured: Отчёт в JSON.
    """
    logger.info("🔬 Запуск demo-s3...")
    cmd = [sys.executable, "-m", "tatehh.main", "demo-s3"]
    if structured:
        cmd += ["--format", "structured"]
    _run_safe_command(ctx, cmd, env=_project_env())


@task(name="dims")
def dims(ctx, group="S3", prime=3, window=4):
    """Таблица размерностей ĤHⁿ(kG, kG).

    Args:
        ctx: Контекст invoke.
        group: Группа.
        prime: Характеристика.
        window: Граница степеней.
    """
    logger.info(f"📐 Размерности для {group} над F_{prime}...")
    cmd = [sys.executable, "-m", "tatehh.main", "dims", "--group", group, "--prime", prime, "--window", window]
    _run_safe_command(ctx, cmd, env=_project_env())
