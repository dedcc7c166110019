from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from tatehh.services.groups import (
    GroupAction,
    builtin_group,
    conjugation_action,
    double_coset_reps,
    locate_product_datum,
    orbit_representatives,
    orbit_stabilizer,
    trivial_action,
)
from tatehh.services.groups.exceptions import InvalidActionException, InvalidProductDatumException

GROUP_NAMES = st.sampled_from(["C3", "C2xC2", "S3", "D4", "Q8"])


def orbit_data(action):
    triples = orbit_representatives(action)
    return [t[0] for t in triples], [t[2] for t in triples]


class TestGroupAction(TestCase):
    """Тесты для GroupAction."""

    def test_inversion_automorphism(self):
        """C₂ действует на C₃ инверсией: орбиты {1}, {a, a²}."""
        actor, target = builtin_group("C2"), builtin_group("C3")
        action = GroupAction(actor=actor, target=target, act=np.array([[0, 1, 2], [0, 2, 1]]))
        reps, stabilizers = orbit_data(action)
        self.assertEqual(reps, [0, 1])
        self.assertEqual([s.order for s in stabilizers], [2, 1])

    def test_rejects_translation(self):
        """Сдвиг не является автоморфизмом."""
        actor, target = builtin_group("C2"), builtin_group("C3")
        with self.assertRaises(InvalidActionException):
            GroupAction(actor=actor, target=target, act=np.array([[0, 1, 2], [1, 2, 0]]))

    def test_rejects_non_homomorphism(self):
        """Инверсия, назначенная элементу порядка 3, не даёт гомоморфизма."""
        group = builtin_group("C3")
        with self.assertRaises(InvalidActionException):
            GroupAction(actor=group, target=group, act=np.array([[0, 1, 2], [0, 2, 1], [0, 2, 1]]))

    def test_conjugation_recognized(self):
        group = builtin_group("S3")
        self.assertTrue(conjugation_action(group).is_conjugation())
        self.assertFalse(trivial_action(group, group).is_conjugation())


class TestOrbitStabilizer(TestCase):
    """Тесты для orbit_stabilizer()."""

    def test_s3_conjugation(self):
        """Орбита a есть {a, a²}, стабилизатор N."""
        group = builtin_group("S3")
        orbit, stabilizer = orbit_stabilizer(conjugation_action(group), 1)
        self.assertEqual(orbit, (1, 3))
        self.assertEqual(stabilizer.members, (0, 1, 3))

    def test_trivial_action(self):
        group = builtin_group("S3")
        orbit, stabilizer = orbit_stabilizer(trivial_action(group, group), 4)
        self.assertEqual(orbit, (4,))
        self.assertTrue(stabilizer.is_whole())

    def test_abelian_conjugation(self):
        group = builtin_group("C2xC2")
        reps, _ = orbit_data(conjugation_action(group))
        self.assertEqual(reps, [0, 1, 2, 3])

    @given(GROUP_NAMES, st.data())
    @settings(max_examples=30, deadline=None)
    def test_counting_identity(self, name, data):
        """|орбита|·|Stab| = |H|."""
        group = builtin_group(name)
        g = data.draw(st.integers(min_value=0, max_value=group.order - 1))
        orbit, stabilizer = orbit_stabilizer(conjugation_action(group), g)
        self.assertEqual(len(orbit) * stabilizer.order, group.order)


class TestLocateProductDatum(TestCase):
    """Тесты для locate_product_datum()."""

    def setUp(self):
        self.group = builtin_group("S3")
        self.action = conjugation_action(self.group)
        self.reps, self.stabilizers = orbit_data(self.action)

    def test_identity_orbit(self):
        for x in range(6):
            datum = locate_product_datum(self.action, self.reps, self.stabilizers, 0, 0, x)
            self.assertEqual(datum.k, 0)

    def test_square_of_rotation(self):
        """a·a = a², сопряжённый с a через y = b."""
        datum = locate_product_datum(self.action, self.reps, self.stabilizers, 1, 1, 0)
        self.assertEqual(datum.k, 1)
        self.assertEqual(datum.y, 2)
        self.assertEqual(datum.subgroup.members, (0, 1, 3))

    def test_rotation_times_reflection(self):
        """ab лежит в классе b."""
        datum = locate_product_datum(self.action, self.reps, self.stabilizers, 1, 2, 0)
        self.assertEqual(datum.k, 2)
        self.assertEqual(datum.subgroup.order, 1)

    def test_rejects_bad_indices(self):
        with self.assertRaises(InvalidProductDatumException):
            locate_product_datum(self.action, self.reps, self.stabilizers, 3, 0, 0)
        with self.assertRaises(InvalidProductDatumException):
            locate_product_datum(self.action, self.reps, self.stabilizers, 0, 0, 6)

    @given(GROUP_NAMES)
    @settings(max_examples=10, deadline=None)
    def test_product_identity_stable_under_stabilizer(self, name):
        """g_k = ^{hy}g_i · ^{hyx}g_j для всех h ∈ H_k."""
        group = builtin_group(name)
        action = conjugation_action(group)
        reps, stabilizers = orbit_data(action)
        for i in range(len(reps)):
            for j in range(len(reps)):
                for x in double_coset_reps(stabilizers[i], stabilizers[j]):
                    datum = locate_product_datum(action, reps, stabilizers, i, j, x)
                    self.assertTrue(datum.subgroup.is_subgroup_of(stabilizers[datum.k]))
                    for h in stabilizers[datum.k].members:
                        y = group.mul(h, datum.y)
                        left = action.apply(y, reps[i])
                        right = action.apply(group.mul(y, x), reps[j])
                        self.assertEqual(group.mul(left, right), reps[datum.k])
