from unittest import TestCase

from hypothesis import given, settings, strategies as st

from tatehh.services.groups import (
    builtin_group,
    conjugacy_data,
    coset_reps,
    double_coset,
    double_coset_reps,
    right_transversal,
)

GROUP_NAMES = st.sampled_from(["C4", "C6", "C2xC2", "S3", "D4", "Q8"])


def all_subgroups(group):
    """Все подгруппы, порождённые не более чем двумя элементами."""
    found = {}
    for a in range(group.order):
        for b in range(a, group.order):
            subgroup = group.generated_subgroup([a, b])
            found[subgroup.members] = subgroup
    return list(found.values())


class TestConjugacyData(TestCase):
    """Тесты для conjugacy_data()."""

    def test_s3(self):
        """S₃: представители 1, a, b с централизаторами порядков 6, 3, 2."""
        classes = conjugacy_data(builtin_group("S3"))
        self.assertEqual([c.rep for c in classes], [0, 1, 2])
        self.assertEqual([c.centralizer.order for c in classes], [6, 3, 2])
        self.assertEqual(classes[1].centralizer.members, (0, 1, 3))
        self.assertEqual(classes[2].members, (2, 4, 5))

    def test_abelian_singletons(self):
        group = builtin_group("C2xC2")
        classes = conjugacy_data(group)
        self.assertEqual(len(classes), 4)
        self.assertTrue(all(c.centralizer.is_whole() for c in classes))

    @given(GROUP_NAMES)
    @settings(max_examples=12, deadline=None)
    def test_class_equation(self, name):
        """Классы разбивают группу, |класс|·|C_G(g)| = |G|."""
        group = builtin_group(name)
        classes = conjugacy_data(group)
        self.assertEqual(sorted(g for c in classes for g in c.members), list(range(group.order)))
        for c in classes:
            self.assertEqual(len(c.members) * c.centralizer.order, group.order)
            self.assertEqual(c.rep, min(c.members))


class TestCosetReps(TestCase):
    """Тесты для coset_reps() и right_transversal()."""

    def setUp(self):
        self.group = builtin_group("S3")
        self.normal = self.group.subgroup([0, 1, 3])

    def test_whole_and_trivial(self):
        self.assertEqual(coset_reps(self.group, self.group.whole()), [0])
        self.assertEqual(coset_reps(self.group, self.group.trivial_subgroup()), list(range(6)))

    def test_normal_subgroup(self):
        """S₃ / N: представители {1, b}."""
        self.assertEqual(coset_reps(self.group, self.normal), [0, 2])

    def test_right_transversal_decomposition(self):
        """g = v·c для каждого g."""
        h3 = self.group.subgroup([0, 2])
        transversal = right_transversal(h3)
        self.assertEqual(transversal.size, 3)
        for g in range(self.group.order):
            v, c = transversal.decompose(g)
            self.assertIn(v, h3.members)
            self.assertEqual(self.group.mul(v, transversal.reps[c]), g)


class TestDoubleCosetReps(TestCase):
    """Тесты для double_coset_reps()."""

    def test_examples(self):
        group = builtin_group("S3")
        normal = group.subgroup([0, 1, 3])
        self.assertEqual(double_coset_reps(group.whole(), group.whole()), [0])
        self.assertEqual(double_coset_reps(normal, normal), [0, 2])
        trivial = group.trivial_subgroup()
        self.assertEqual(double_coset_reps(trivial, trivial), list(range(6)))

    @given(GROUP_NAMES, st.data())
    @settings(max_examples=25, deadline=None)
    def test_partition(self, name, data):
        """Двойные смежные классы HxK разбивают G без пересечений."""
        group = builtin_group(name)
        subgroups = all_subgroups(group)
        left = data.draw(st.sampled_from(subgroups))
        right = data.draw(st.sampled_from(subgroups))
        cosets = [double_coset(left, x, right) for x in double_coset_reps(left, right)]
        self.assertEqual(sum(len(c) for c in cosets), group.order)
        self.assertEqual(set().union(*cosets), set(range(group.order)))
        for x, coset in zip(double_coset_reps(left, right), cosets):
            self.assertEqual(x, min(coset))
