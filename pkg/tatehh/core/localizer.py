"""Локализация сообщений об ошибках: переводы из tatehh/locales/*.json с плоскими ключами вида service.errors.name."""

import json
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from ..config import DEFAULT_LOCALE

logger = logging.getLogger(__name__)

LOCALES_DIR = Path(__file__).resolve().parent.parent / "locales"

Locale = str
LocalizerKey = str
LocalizerDict = dict[Locale, dict[str, Any]]
FlatTranslations = dict[LocalizerKey, str]


def load_translations(locales_dir: Path = LOCALES_DIR) -> LocalizerDict:
    """Функция загрузки вложенных словарей переводов, по одному файлу на локаль.

    Args:
        locales_dir: Каталог с файлами <locale>.json.

    Returns:
        Словарь {локаль: вложенный словарь переводов}.
    """
    return {path.stem: json.loads(path.read_text(encoding="utf-8")) for path in sorted(locales_dir.glob("*.json"))}


def flatten(node: Mapping[str, Any], prefix: str = "") -> FlatTranslations:
    """Функция перевода вложенного словаря в плоский: {"a": {"b": "x"}} -> {"a.b": "x"}.

    Нестроковые листья пропускаются.
    """
    flat: FlatTranslations = {}
    for name, value in node.items():
        key = f"{prefix}{name}"
        if isinstance(value, Mapping):
            flat.update(flatten(value, f"{key}."))
        elif isinstance(value, str):
            flat[key] = value
    return flat


class LocalizerStore:
    """Хранилище плоских переводов по локалям с откатом на DEFAULT_LOCALE."""

    def __init__(self, translations: LocalizerDict) -> None:
        self._flat: dict[Locale, FlatTranslations] = {
            locale: flatten(tree) for locale, tree in translations.items()
        }

    @property
    def locales(self) -> tuple[Locale, ...]:
        return tuple(sorted(self._flat))

    def lookup(self, key: LocalizerKey, locale: Locale | None = None) -> str | None:
        """Метод поиска строки: сначала в локали, затем в DEFAULT_LOCALE.

        Args:
            key: Ключ перевода.
            locale: Тег локали; неизвестная локаль равносильна DEFAULT_LOCALE.

        Returns:
            Строка перевода или None.
        """
        for candidate in (locale or DEFAULT_LOCALE, DEFAULT_LOCALE):
            text = self._flat.get(candidate, {}).get(key)
            if text is not None:
                return text
        return None

    def get(self, key: LocalizerKey, locale: Locale | None = None, **params: str | int) -> str:
        """Метод получения перевода с подстановкой {name}.

        При отсутствии перевода возвращается сам ключ, при нехватке параметров строка без подстановки.
        """
        text = self.lookup(key, locale)
        if text is None:
            return key
        try:
            return text.format(**params) if params else text
        except (KeyError, IndexError):
            logger.debug(f"Translation {key!r} expects parameters other than {sorted(params)}")
            return text


class Localizer:
    """Класс локализации: фасад над LocalizerStore с переводами из пакета по умолчанию."""

    def __init__(self, translations: LocalizerDict | None = None) -> None:
        self._store = LocalizerStore(load_translations() if translations is None else translations)

    @property
    def locales(self) -> tuple[Locale, ...]:
        return self._store.locales

    def get(self, key: LocalizerKey, locale: Locale | None = None, **params: str | int) -> str:
        return self._store.get(key, locale=locale, **params)

    def has(self, key: LocalizerKey, locale: Locale | None = None) -> bool:
        return self._store.lookup(key, locale) is not None


def localize_key(localizer: Localizer | None, key: str | None, fallback: str, locale: str, **params: str | int) -> str:
    """Функция локализации по ключу.

    Args:
        localizer: Локализатор или None.
        key: Ключ перевода или None.
        fallback: Строка на случай, когда нет локализатора или перевода.
        locale: Тег локали.
        **params: Параметры для подстановки.

    Returns:
        Переведённая строка или fallback.
    """
    if localizer is None or not key or not localizer.has(key, locale):
        return fallback
    return localizer.get(key, locale, **params)
