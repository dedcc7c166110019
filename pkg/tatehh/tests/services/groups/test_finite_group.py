import json
import tempfile
from pathlib import Path
from unittest import TestCase

from tatehh.schemas import GroupSpecSchema
from tatehh.services.groups import build_group, builtin_group, resolve_group
from tatehh.services.groups.exceptions import (
    GeneratorClosureException,
    GroupTooLargeException,
    InvalidGroupSpecException,
    NotASubgroupException,
    NotAssociativeException,
    NotLatinSquareException,
    UnknownGroupException,
)
from tatehh.services.groups.finite_group import close_permutations, group_from_table

# Латинский квадрат порядка 5 с единицей, в котором 1·1 = 0: группой быть не может
NON_ASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


class TestBuildGroup(TestCase):
    """Тесты для build_group()."""

    def test_symmetric_group_from_permutations(self):
        """Порождающие (0 1 2) и (0 1) дают S₃ порядка 6."""
        group = build_group(GroupSpecSchema(name="S3", order=6, perm_generators=[[1, 2, 0], [1, 0, 2]]))
        self.assertEqual(group.order, 6)
        self.assertFalse(group.is_abelian())
        self.assertEqual(group.identity, 0)

    def test_single_three_cycle(self):
        group = build_group(GroupSpecSchema(name="C3", order=3, perm_generators=[[1, 2, 0]]))
        self.assertEqual(group.order, 3)
        self.assertEqual(group.cyclic_generator(), 1)

    def test_klein_four_group(self):
        """Порождающие (0 1) и (2 3) дают группу Клейна."""
        group = build_group(GroupSpecSchema(name="V4", order=4, perm_generators=[[1, 0, 2, 3], [0, 1, 3, 2]]))
        self.assertEqual(group.order, 4)
        self.assertTrue(group.is_abelian())
        self.assertIsNone(group.cyclic_generator())

    def test_table_identity_moved_to_zero(self):
        """Единица таблицы переносится в индекс 0."""
        group = group_from_table("C2", [[1, 0], [0, 1]], labels=("t", "e"))
        self.assertEqual(group.labels, ("e", "t"))
        self.assertEqual(group.table.tolist(), [[0, 1], [1, 0]])

    def test_rejects_non_latin_square(self):
        with self.assertRaises(NotLatinSquareException):
            build_group(GroupSpecSchema(name="bad", order=2, cayley_table=[[0, 1], [0, 1]]))

    def test_rejects_non_associative_table(self):
        with self.assertRaises(NotAssociativeException):
            build_group(GroupSpecSchema(name="loop", order=5, cayley_table=NON_ASSOCIATIVE_LOOP))

    def test_rejects_ragged_table(self):
        with self.assertRaises(InvalidGroupSpecException):
            build_group(GroupSpecSchema(name="ragged", order=2, cayley_table=[[0, 1], [1]]))

    def test_rejects_order_mismatch(self):
        with self.assertRaises(InvalidGroupSpecException):
            build_group(GroupSpecSchema(name="C3", order=5, perm_generators=[[1, 2, 0]]))

    def test_rejects_too_large_order(self):
        with self.assertRaises(GroupTooLargeException):
            build_group(GroupSpecSchema(name="big", order=1000, perm_generators=[[1, 0]]))

    def test_closure_bound(self):
        """Порождающие S₃ не замыкаются в пределах 5 элементов."""
        with self.assertRaises(GeneratorClosureException):
            close_permutations([(1, 2, 0), (1, 0, 2)], bound=5)

    def test_inverses_consistent(self):
        group = builtin_group("D4")
        for g in range(group.order):
            self.assertEqual(group.mul(g, group.inv(g)), 0)
            self.assertEqual(group.mul(group.inv(g), g), 0)


class TestBuiltinGroups(TestCase):
    """Тесты встроенной библиотеки групп."""

    def test_s3_indexing(self):
        """Нумерация S₃: [1, a, b, a², ab, ba]."""
        group = builtin_group("S3")
        self.assertEqual(group.labels, ("1", "a", "b", "a^2", "ab", "ba"))
        self.assertEqual(group.mul(1, 1), 3)
        self.assertEqual(group.mul(1, 2), 4)
        self.assertEqual(group.mul(2, 1), 5)
        self.assertEqual(group.element_order(1), 3)
        self.assertEqual(group.element_order(2), 2)

    def test_quaternion_group(self):
        """В Q₈ ровно один элемент порядка 2."""
        group = builtin_group("Q8")
        self.assertEqual(group.order, 8)
        self.assertFalse(group.is_abelian())
        involutions = [g for g in range(8) if group.element_order(g) == 2]
        self.assertEqual(involutions, [1])
        self.assertEqual(group.label(1), "-1")

    def test_dihedral_group(self):
        """В D₄ пять элементов порядка 2."""
        group = builtin_group("D4")
        self.assertEqual(group.order, 8)
        self.assertEqual(sum(1 for g in range(8) if group.element_order(g) == 2), 5)

    def test_cyclic_names(self):
        self.assertEqual(builtin_group("C12").order, 12)
        self.assertIsNone(builtin_group("C13"))
        self.assertEqual(builtin_group("C2 × C2").name, "C2xC2")

    def test_resolve_unknown(self):
        with self.assertRaises(UnknownGroupException):
            resolve_group("Monster")

    def test_resolve_spec_file(self):
        """Описание группы читается из JSON-файла."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "c4.json"
            path.write_text(json.dumps({"name": "C4", "order": 4, "perm_generators": [[1, 2, 3, 0]]}))
            group = resolve_group(str(path))
        self.assertEqual(group.order, 4)
        self.assertEqual(group.name, "C4")

    def test_resolve_invalid_spec_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "bad.json"
            path.write_text(json.dumps({"name": "bad", "order": 2}))
            with self.assertRaises(InvalidGroupSpecException):
                resolve_group(str(path))


class TestSubgroup(TestCase):
    """Тесты для Subgroup."""

    def setUp(self):
        self.group = builtin_group("S3")

    def test_rejects_non_closed_set(self):
        with self.assertRaises(NotASubgroupException):
            self.group.subgroup([0, 1])

    def test_conjugate_and_intersect(self):
        """^a{1,b} ∩ {1,b} = {1}."""
        h3 = self.group.subgroup([0, 2])
        conjugate = h3.conjugate(1)
        self.assertNotEqual(conjugate, h3)
        self.assertEqual(conjugate.intersect(h3).members, (0,))

    def test_as_group(self):
        n = self.group.subgroup([0, 1, 3])
        group = n.as_group()
        self.assertEqual(group.order, 3)
        self.assertEqual(group.labels, ("1", "a", "a^2"))
        self.assertTrue(group.is_abelian())

    def test_generated_subgroup(self):
        self.assertEqual(self.group.generated_subgroup([1]).members, (0, 1, 3))
        self.assertTrue(self.group.generated_subgroup([1, 2]).is_whole())
