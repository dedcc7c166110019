import json
import tempfile
from pathlib import Path
from unittest import TestCase

from pydantic import ValidationError

from tatehh.schemas.jobs import JobCommand, JobSpecSchema, OutputFormat
from tatehh.services.groups.exceptions import UnknownGroupException
from tatehh.services.jobs import JobService, TemplateRenderer, TemplateRendererSettings
from tatehh.services.jobs.constants import DEMO_DIMENSIONS
from tatehh.services.jobs.exceptions import ReportRenderFailedException, UnreadableFileException
from tatehh.services.jobs.use_cases import read_relations
from tatehh.services.ringpres import S3_IDEMPOTENT_RELATION, S3_RELATIONS

S3_TRIVIAL_DIMENSIONS = [1, 0, 0, 1, 1, 0, 0, 1, 1]


def job(**fields) -> JobSpecSchema:
    return JobSpecSchema(**{"command": JobCommand.DIMS, **fields})


class TestJobSpecSchema(TestCase):
    """Тесты для валидации задания."""

    def test_defaults(self):
        spec = job()
        self.assertEqual((spec.group, spec.prime, spec.window, spec.seed), ("S3", 3, 4, 0))
        self.assertEqual(spec.output_format, OutputFormat.TEXT)
        self.assertEqual(spec.backend, "auto")
        self.assertEqual(spec.naming, "generic")

    def test_command_from_cli_name(self):
        self.assertEqual(job(command="oracle-check").command, JobCommand.ORACLE_CHECK)
        self.assertEqual(job(command="demo-s3").command, JobCommand.DEMO_S3)

    def test_rejects_composite_prime(self):
        for prime in (0, 1, 4, 9):
            with self.assertRaises(ValidationError, msg=prime):
                job(prime=prime)

    def test_rejects_empty_window(self):
        with self.assertRaises(ValidationError):
            job(window=0)

    def test_verify_needs_relations(self):
        with self.assertRaises(ValidationError):
            job(command=JobCommand.VERIFY)
        self.assertEqual(job(command=JobCommand.VERIFY, relations="r.txt").relations, Path("r.txt"))


class TestDimensionJobs(TestCase):
    """Тесты для команд dims и tate."""

    service = JobService()

    def test_s3_dimensions(self):
        report = self.service.exec(job())
        self.assertEqual([row.degree for row in report.dimensions], list(range(-4, 5)))
        self.assertEqual(tuple(row.total for row in report.dimensions), DEMO_DIMENSIONS)
        for row in report.dimensions:
            self.assertEqual(len(row.orbits), 3)
            self.assertEqual(sum(row.orbits), row.total)
            self.assertEqual(row.orbits[2], 0)
        self.assertEqual(report.meta.backend, "reduced")
        self.assertEqual(report.meta.order, 6)

    def test_coprime_dimensions_vanish(self):
        report = self.service.exec(job(group="C2", window=3))
        self.assertEqual([row.total for row in report.dimensions], [0] * 7)

    def test_s3_trivial_coefficients(self):
        report = self.service.exec(job(command=JobCommand.TATE))
        self.assertEqual([row.total for row in report.dimensions], S3_TRIVIAL_DIMENSIONS)
        self.assertTrue(all(not row.orbits for row in report.dimensions))

    def test_cyclic_backend_selected(self):
        report = self.service.exec(job(command=JobCommand.TATE, group="C3", window=3))
        self.assertEqual(report.meta.backend, "cyclic")
        self.assertEqual([row.total for row in report.dimensions], [1] * 7)

    def test_unknown_group(self):
        with self.assertRaises(UnknownGroupException):
            self.service.exec(job(group="S7"))


class TestReadRelations(TestCase):
    """Тесты для чтения файла соотношений."""

    def test_skips_blank_and_comment_lines(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath("relations.txt")
            path.write_text("# S3\n\nC^2 = 0\n   \n  W2^2 = z*C  \n# done\n", encoding="utf-8")
            self.assertEqual(read_relations(path), ["C^2 = 0", "W2^2 = z*C"])

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(UnreadableFileException):
                read_relations(Path(tmp).joinpath("missing.txt"))

    def test_directory(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(UnreadableFileException):
                read_relations(Path(tmp))

    def test_not_utf8(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath("relations.txt")
            path.write_bytes(b"\xff\xfe\xfa C = 0\n")
            with self.assertRaises(UnreadableFileException):
                read_relations(path)


class TestRingJobs(TestCase):
    """Тесты для команд ring и verify над S3, p = 3."""

    service = JobService()

    def test_ring(self):
        report = self.service.exec(job(command=JobCommand.RING, window=6))
        self.assertTrue(report.passed)
        presentation = report.presentation
        self.assertEqual([g.degree for g in presentation.generators], [3, 4, -4, 0, 1, 2, -2])
        self.assertTrue(presentation.complete)
        self.assertEqual(presentation.window, (-7, 7))
        self.assertEqual(len(report.relations), len(presentation.relations))
        self.assertEqual(len(report.nilpotency), len(presentation.generators))

    def test_verify_named_relations(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath("relations.txt")
            path.write_text("\n".join(["# S3 over F_3", *S3_RELATIONS, S3_IDEMPOTENT_RELATION]), encoding="utf-8")
            report = self.service.exec(job(command=JobCommand.VERIFY, window=6, naming="named", relations=path))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.relations), 12)
        self.assertEqual(report.relations[0].relation, "x*W1 = 0")

    def test_verify_reports_failures(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath("relations.txt")
            path.write_text("C^2 = 0\nW2^2 = z\n", encoding="utf-8")
            report = self.service.exec(job(command=JobCommand.VERIFY, window=6, naming="named", relations=path))
        self.assertFalse(report.passed)
        self.assertEqual([verdict.passed for verdict in report.relations], [True, False])
        self.assertTrue(any(report.relations[1].witness))


class TestCheckJobs(TestCase):
    """Тесты для команд oracle-check и props."""

    service = JobService()

    def test_oracle_check(self):
        report = self.service.exec(job(command=JobCommand.ORACLE_CHECK, window=2))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 19)
        self.assertEqual(report.checks[0].name, "formula vs oracle, degrees (-2, 0)")

    def test_oracle_check_respects_window(self):
        report = self.service.exec(job(command=JobCommand.ORACLE_CHECK, group="C3", window=1))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.checks), 7)

    def test_props(self):
        report = self.service.exec(job(command=JobCommand.PROPS, group="C2", prime=3, window=2))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.properties), 23)


class TestRendering(TestCase):
    """Тесты для отрисовки отчётов."""

    service = JobService()

    def test_text_report(self):
        text = self.service.render(self.service.exec(job()), OutputFormat.TEXT)
        self.assertTrue(text.startswith("dims: S3 (order 6), p = 3, W = 4, backend reduced, seed 0"))
        self.assertIn("Dimensions:", text)
        self.assertIn("n =  -4  dim = 2  by class: 1 1 0", text)
        self.assertTrue(text.rstrip().endswith("Status: PASS"))

    def test_structured_report_is_deterministic(self):
        first = self.service.render(self.service.exec(job(window=2)), OutputFormat.STRUCTURED)
        second = self.service.render(self.service.exec(job(window=2)), OutputFormat.STRUCTURED)
        self.assertEqual(first, second)
        document = json.loads(first)
        self.assertEqual(document["meta"]["group"], "S3")
        self.assertTrue(document["passed"])
        self.assertEqual([row["total"] for row in document["dimensions"]], [1, 2, 2, 1, 1])


class TestTemplateRenderer(TestCase):
    """Тесты для TemplateRenderer."""

    def test_templates_dir_missing(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ReportRenderFailedException):
                TemplateRendererSettings(templates_dir=Path(tmp).joinpath("missing"))

    def test_render_and_cache(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp).joinpath("line.txt.j2").write_text("{{ name }} = {{ value }}", encoding="utf-8")
            renderer = TemplateRenderer(TemplateRendererSettings(templates_dir=Path(tmp)))
            self.assertEqual(renderer.render("line.txt.j2", {"name": "dim", "value": 2}), "dim = 2")
            Path(tmp).joinpath("line.txt.j2").unlink()
            self.assertEqual(renderer.render("line.txt.j2", {"name": "dim", "value": 1}), "dim = 1")

    def test_missing_template(self):
        renderer = TemplateRenderer()
        with self.assertRaises(ReportRenderFailedException) as ctx:
            renderer.render("missing.txt.j2", {})
        self.assertEqual(ctx.exception.key, "jobs.errors.template_not_found")

    def test_undefined_variable(self):
        with tempfile.TemporaryDirectory() as tmp:
            Path(tmp).joinpath("line.txt.j2").write_text("{{ name }}", encoding="utf-8")
            renderer = TemplateRenderer(TemplateRendererSettings(templates_dir=Path(tmp)))
            with self.assertRaises(ReportRenderFailedException) as ctx:
                renderer.render("line.txt.j2", {})
        self.assertEqual(ctx.exception.key, "jobs.errors.render_failed")
        self.assertEqual(ctx.exception.exit_code, 4)
