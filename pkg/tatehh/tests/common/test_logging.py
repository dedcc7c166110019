import logging
from io import StringIO
from unittest import TestCase

from tatehh.core.logging import resolve_level, setup_logging


class TestLogging(TestCase):
    """Тесты для core.logging."""

    def tearDown(self):
        root = logging.getLogger()
        for handler in list(root.handlers):
            root.removeHandler(handler)

    def test_resolve_level(self):
        self.assertEqual(resolve_level("debug"), logging.DEBUG)
        self.assertEqual(resolve_level("WARNING"), logging.WARNING)
        self.assertEqual(resolve_level(logging.ERROR), logging.ERROR)
        self.assertEqual(resolve_level("loud"), logging.INFO)

    def test_writes_to_stream(self):
        stream = StringIO()
        setup_logging("INFO", stream=stream, force=True)
        logging.getLogger("tatehh.services.decomp").info("orbits=3")
        logging.getLogger("tatehh.services.decomp").debug("hidden")
        self.assertEqual(stream.getvalue(), "[INFO][tatehh.services.decomp]:orbits=3\n")
