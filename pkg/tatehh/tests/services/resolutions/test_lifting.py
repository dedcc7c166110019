from unittest import TestCase

import numpy as np

from tatehh.services.groups import builtin_group
from tatehh.services.kgmodules import quotient, free_module
from tatehh.services.linalg import FpMatrix, mat_mul
from tatehh.services.resolutions import (
    chain_lift,
    comparison_map,
    cyclic_periodic_resolution,
    reduced_complete_resolution,
    standard_complete_resolution,
)


class ChainMapAssertions:
    def assertChainMap(self, lift):
        """(d'_r ⊗ 1)F_r(b_s) = F_{r-1}(d b_s) во всех степенях подъёма."""
        group = lift.source.group
        n = group.order
        for r in range(lift.lowest + 1, lift.highest + 1):
            values = lift.value(r)
            boundary = lift.target.expanded(r).data
            source = lift.source.expanded(r + lift.shift).data
            for s in range(values.shape[0]):
                left = mat_mul(boundary, values[s], lift.p)
                right = lift.apply(r - 1, source[:, s * n])
                self.assertTrue(np.array_equal(left, right), msg=f"r={r}, s={s}")


class TestComparisonMap(ChainMapAssertions, TestCase):
    """Тесты для comparison_map()."""

    def test_bar_to_periodic(self):
        group = builtin_group("C3")
        bar = standard_complete_resolution(group, 3, (-3, 3))
        periodic = cyclic_periodic_resolution(group, 3, (-3, 3))
        lift = comparison_map(bar, periodic)
        self.assertEqual((lift.lowest, lift.highest), (-3, 3))
        self.assertChainMap(lift)

    def test_augmentation_is_preserved(self):
        group = builtin_group("S3")
        reduced = reduced_complete_resolution(group, 3, (-3, 3))
        lift = comparison_map(reduced, reduced)
        self.assertEqual(int(lift.value(0)[0].sum() % 3), 1)
        self.assertChainMap(lift)

    def test_is_cached(self):
        group = builtin_group("C2")
        source = reduced_complete_resolution(group, 2, (-2, 2))
        target = cyclic_periodic_resolution(group, 2, (-2, 2))
        self.assertIs(comparison_map(source, target), comparison_map(source, target))


class TestChainLift(ChainMapAssertions, TestCase):
    """Тесты для chain_lift()."""

    def test_quotient_coefficients(self):
        """Подъём проекции X_s → X_s / im d_{s+1} со сдвигом s."""
        group = builtin_group("S3")
        resolution = reduced_complete_resolution(group, 3, (-4, 4))
        for shift in (1, -2):
            image = FpMatrix(3, resolution.expanded(shift + 1).data)
            omega, basis = quotient(free_module(group, 3, resolution.rank(shift)), image)
            seed = np.stack([basis.projection.data[:, s * group.order] for s in range(resolution.rank(shift))])
            lift = chain_lift(resolution, resolution, shift, omega, seed)
            self.assertChainMap(lift)
