from unittest import TestCase

from tatehh.services.groups import builtin_group
from tatehh.services.props import CHECKS, PropertyFamily, PropertySuite, is_normal, subgroup_lattice
from tatehh.services.resolutions import Backend


class TestSubgroupLattice(TestCase):
    """Тесты для subgroup_lattice()."""

    def test_sizes(self):
        for name, size in (("S3", 6), ("D4", 10), ("Q8", 6), ("C2xC2", 5), ("C6", 4)):
            self.assertEqual(len(subgroup_lattice(builtin_group(name))), size, msg=name)

    def test_order(self):
        lattice = subgroup_lattice(builtin_group("S3"))
        self.assertEqual([subgroup.order for subgroup in lattice], [1, 2, 2, 2, 3, 6])
        self.assertEqual(lattice[4].members, (0, 1, 3))

    def test_normal(self):
        normal = [subgroup.order for subgroup in subgroup_lattice(builtin_group("S3")) if is_normal(subgroup)]
        self.assertEqual(normal, [1, 3, 6])


class TestS3Suite(TestCase):
    """Тесты для тождеств над S3, p = 3, n ∈ [-2, 3]."""

    @classmethod
    def setUpClass(cls):
        cls.suite = PropertySuite(builtin_group("S3"), 3, backend=Backend.REDUCED, budget=40)
        cls.verdicts = cls.suite.run()

    def test_every_identity_holds(self):
        self.assertEqual([verdict.name for verdict in self.verdicts], list(CHECKS))
        for verdict in self.verdicts:
            self.assertTrue(verdict.passed, msg=f"{verdict.name}: {verdict.detail}")

    def test_budget_bounds_cases(self):
        for verdict in self.verdicts:
            self.assertLessEqual(verdict.checked, 40, msg=verdict.name)
            self.assertLessEqual(verdict.checked, verdict.total, msg=verdict.name)
        checked = {verdict.name: verdict.checked for verdict in self.verdicts}
        self.assertEqual(checked["conjugation_composes"], 40)
        self.assertEqual(checked["agrees_with_ordinary_cohomology"], 3)
        self.assertEqual(checked["negative_degrees_are_homology"], 1)

    def test_families(self):
        families = {verdict.name: verdict.family for verdict in self.verdicts}
        self.assertEqual(families["mackey_formula"], PropertyFamily.MAPS)
        self.assertEqual(families["pi_after_theta"], PropertyFamily.COEFFICIENTS)
        self.assertEqual(families["eckmann_shapiro"], PropertyFamily.STRUCTURE)

    def test_mackey_formula_exhaustive(self):
        suite = PropertySuite(builtin_group("S3"), 3, backend=Backend.REDUCED)
        (verdict,) = suite.run(["mackey_formula"])
        self.assertTrue(verdict.passed, msg=verdict.detail)
        self.assertEqual(verdict.checked, 54)

    def test_every_case_without_budget(self):
        suite = PropertySuite(builtin_group("S3"), 3, backend=Backend.REDUCED, budget=None)
        verdicts = suite.run()
        self.assertEqual([verdict.name for verdict in verdicts], list(CHECKS))
        for verdict in verdicts:
            self.assertTrue(verdict.passed, msg=f"{verdict.name}: {verdict.detail}")
            self.assertEqual(verdict.checked, verdict.total, msg=verdict.name)
        totals = {verdict.name: verdict.total for verdict in verdicts}
        self.assertEqual(totals["mackey_formula"], 54)
        self.assertGreater(totals["conjugation_composes"], 40)

    def test_failure_is_reported(self):
        verdict = self.suite._verdict("ordered", PropertyFamily.MAPS, [(1,), (2,), (3,)], lambda n: n < 2)
        self.assertFalse(verdict.passed)
        self.assertEqual(verdict.checked, 2)
        self.assertEqual(verdict.total, 3)
        self.assertEqual(verdict.detail, "fails at (2)")

    def test_sampling_is_seeded(self):
        cases = [(i,) for i in range(100)]
        first = PropertySuite(builtin_group("S3"), 3, seed=7, budget=10)._sample(cases)
        second = PropertySuite(builtin_group("S3"), 3, seed=7, budget=10)._sample(cases)
        self.assertEqual(first, second)
        self.assertEqual(len(first), 10)
        self.assertEqual(first, sorted(first))
        self.assertEqual(PropertySuite(builtin_group("S3"), 3, budget=None)._sample(cases), cases)


class TestSmallSuites(TestCase):
    """Тесты для тождеств над другими группами."""

    def test_coprime_characteristic(self):
        verdicts = PropertySuite(builtin_group("C2"), 3, budget=20).run()
        self.assertTrue(all(verdict.passed for verdict in verdicts))

    def test_klein_four_maps(self):
        suite = PropertySuite(builtin_group("C2xC2"), 2, range(-1, 3), Backend.REDUCED, budget=25)
        names = ["corestriction_after_restriction", "conjugation_restriction", "mackey_formula", "pi_after_theta"]
        for verdict in suite.run(names):
            self.assertTrue(verdict.passed, msg=f"{verdict.name}: {verdict.detail}")

    def test_odd_squares_skipped_in_characteristic_two(self):
        suite = PropertySuite(builtin_group("C2"), 2, range(-1, 3), budget=10)
        (verdict,) = suite.run(["odd_squares_vanish"])
        self.assertTrue(verdict.passed)
        self.assertEqual(verdict.checked, 0)
