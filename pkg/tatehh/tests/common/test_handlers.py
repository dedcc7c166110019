import json
from io import StringIO
from unittest import TestCase

from pydantic import ValidationError

from tatehh.core.handlers import (
    INTERNAL_EXIT_CODE,
    app_exception_handler,
    localized_message,
    unhandled_exception_handler,
    validation_error_details,
)
from tatehh.core.localizer import Localizer
from tatehh.schemas.jobs import JobSpecSchema
from tatehh.services.jobs.exceptions import (
    JobVerificationFailedException,
    ReportRenderFailedException,
    UnreadableFileException,
)
from tatehh.services.resolutions.exceptions import ResolutionTooLargeException

TRANSLATIONS = {
    locale: {"jobs": {"errors": {"relations_file_missing": "No relations file {path}"}}} for locale in ("en", "ru")
}


class TestAppExceptionHandler(TestCase):
    """Тесты для обработчика AppException."""

    def setUp(self):
        self.localizer = Localizer(TRANSLATIONS)
        self.stdout, self.stderr = StringIO(), StringIO()
        self.exc = UnreadableFileException(
            key="jobs.errors.relations_file_missing",
            fallback="Relations file r.txt does not exist",
            translation_params={"path": "r.txt"},
            details={"path": "r.txt"},
        )

    def test_localized_message(self):
        self.assertEqual(localized_message(self.exc, self.localizer, "en"), "No relations file r.txt")
        self.assertEqual(localized_message(self.exc, None, "en"), "Relations file r.txt does not exist")

    def test_text_mode(self):
        code = app_exception_handler(self.exc, self.localizer, False, self.stdout, self.stderr)
        self.assertEqual(code, 2)
        self.assertEqual(self.stderr.getvalue(), "error [JOB_UNREADABLE_FILE]: No relations file r.txt\n")
        self.assertEqual(self.stdout.getvalue(), "")

    def test_structured_mode(self):
        code = app_exception_handler(self.exc, self.localizer, True, self.stdout, self.stderr)
        self.assertEqual(code, 2)
        document = json.loads(self.stdout.getvalue())
        expected = {"code": "JOB_UNREADABLE_FILE", "message": "No relations file r.txt", "details": {"path": "r.txt"}}
        self.assertEqual(document, expected)

    def test_exit_codes(self):
        cases = (
            (JobVerificationFailedException(fallback="failed"), 1),
            (ResolutionTooLargeException(fallback="too large"), 3),
            (ReportRenderFailedException(fallback="broken"), 4),
        )
        for exc, expected in cases:
            self.assertEqual(app_exception_handler(exc, None, False, self.stdout, self.stderr), expected)
        self.assertIn("error [JOB_VERIFICATION_FAILED]: failed", self.stderr.getvalue())


class TestUnhandledExceptionHandler(TestCase):
    """Тесты для обработчика необработанных исключений."""

    def test_internal_error(self):
        stdout, stderr = StringIO(), StringIO()
        try:
            raise ZeroDivisionError("division by zero")
        except ZeroDivisionError as e:
            code = unhandled_exception_handler(e, True, stdout, stderr)
        self.assertEqual(code, INTERNAL_EXIT_CODE)
        self.assertEqual(stderr.getvalue(), "error [INTERNAL_ERROR]: ZeroDivisionError: division by zero\n")
        self.assertEqual(json.loads(stdout.getvalue())["code"], "INTERNAL_ERROR")


class TestValidationErrorDetails(TestCase):
    def test_json_compatible(self):
        with self.assertRaises(ValidationError) as ctx:
            JobSpecSchema(command="dims", prime=4, window=0)
        details = validation_error_details(ctx.exception)
        self.assertEqual(sorted(item["loc"][0] for item in details), ["prime", "window"])
        json.dumps(details)
