"""Тесты для core.localizer (load_translations, LocalizerStore, Localizer, localize_key)."""

from unittest import TestCase

from tatehh.core.localizer import Localizer, LocalizerStore, load_translations, localize_key


def _keys(node: dict, prefix: str = "") -> set[str]:
    keys = set()
    for name, value in node.items():
        path = f"{prefix}{name}"
        keys |= _keys(value, f"{path}.") if isinstance(value, dict) else {path}
    return keys


class TestLoadTranslations(TestCase):
    """Тесты для load_translations()."""

    def test_contains_supported_locales(self):
        result = load_translations()
        self.assertIn("en", result)
        self.assertIn("ru", result)

    def test_locales_share_keys(self):
        """Ключи en и ru совпадают."""
        result = load_translations()
        self.assertEqual(_keys(result["en"]), _keys(result["ru"]))

    def test_known_key_exists(self):
        result = load_translations()
        self.assertIn("window_exhausted", result["en"]["resolutions"]["errors"])


class TestLocalizerStore(TestCase):
    """Тесты для LocalizerStore."""

    def setUp(self):
        self.store = LocalizerStore(
            {
                "en": {"groups": {"errors": {"unknown_group": "Unknown group {name}", "only_en": "English"}}},
                "ru": {"groups": {"errors": {"unknown_group": "Неизвестная группа {name}"}}},
            }
        )

    def test_get_with_params(self):
        self.assertEqual(self.store.get("groups.errors.unknown_group", "en", name="S7"), "Unknown group S7")
        self.assertEqual(self.store.get("groups.errors.unknown_group", "ru", name="S7"), "Неизвестная группа S7")

    def test_unknown_locale_falls_back_to_default(self):
        self.assertEqual(self.store.get("groups.errors.unknown_group", "de", name="S7"), "Unknown group S7")

    def test_missing_key_falls_back_to_default_locale(self):
        self.assertEqual(self.store.get("groups.errors.only_en", "ru"), "English")

    def test_missing_key_returns_key(self):
        self.assertEqual(self.store.get("groups.errors.absent", "en"), "groups.errors.absent")
        self.assertEqual(self.store.get("groups.errors", "en"), "groups.errors")

    def test_missing_param_keeps_template(self):
        self.assertEqual(self.store.get("groups.errors.unknown_group", "en", other="x"), "Unknown group {name}")


class TestLocalizeKey(TestCase):
    """Тесты для localize_key()."""

    def setUp(self):
        self.localizer = Localizer({"en": {"jobs": {"errors": {"invalid_job": "Invalid job: {count}"}}}})

    def test_translates(self):
        self.assertEqual(localize_key(self.localizer, "jobs.errors.invalid_job", "x", "en", count=2), "Invalid job: 2")

    def test_fallback_without_localizer_or_key(self):
        self.assertEqual(localize_key(None, "jobs.errors.invalid_job", "fallback", "en"), "fallback")
        self.assertEqual(localize_key(self.localizer, None, "fallback", "en"), "fallback")

    def test_fallback_for_unknown_key(self):
        self.assertEqual(localize_key(self.localizer, "jobs.errors.absent", "fallback", "en"), "fallback")
