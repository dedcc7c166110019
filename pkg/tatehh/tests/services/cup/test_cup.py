from itertools import product
from unittest import TestCase

import numpy as np

from tatehh.services.cup import DiagonalMethod, cup, diagonal_component, unit_class
from tatehh.services.cup.exceptions import (
    DiagonalUnavailableException,
    PairingMismatchException,
    SpaceMismatchException,
)
from tatehh.services.groups import builtin_group
from tatehh.services.kgmodules import conjugation_module, multiplication_pairing, trivial_module
from tatehh.services.linalg import FpMatrix, mat_mul, rank
from tatehh.services.maps import conjugation, corestriction, restriction
from tatehh.services.resolutions import (
    Backend,
    TateWorkspace,
    cyclic_periodic_resolution,
    standard_complete_resolution,
    tate_cohomology,
)


class DiagonalAssertions:
    def assertChainCell(self, resolution, r, s, method=None):
        """(d_r ⊗ 1)F_r(b_t) = F_{r-1}(d_{r+s} b_t) для компонент (r, s) и (r-1, s)."""
        upper = diagonal_component(resolution, r, s, method)
        lower = diagonal_component(resolution, r - 1, s, method)
        boundary = resolution.expanded(r).data
        source = resolution.expanded(r + s).data
        order = resolution.group.order
        for t in range(resolution.rank(r + s)):
            left = mat_mul(boundary, upper.values[t], resolution.p)
            right = lower.apply(source[:, t * order])
            self.assertTrue(np.array_equal(left, right), msg=f"cell ({r}, {s}), t={t}")


class TestDiagonal(DiagonalAssertions, TestCase):
    """Тесты для diagonal_component()."""

    def test_alexander_whitney(self):
        resolution = standard_complete_resolution(builtin_group("C3"), 3, (-3, 3))
        for r, s in ((1, 0), (1, 1), (2, 0), (1, 2), (2, 1)):
            self.assertChainCell(resolution, r, s)
            self.assertEqual(diagonal_component(resolution, r, s).method, DiagonalMethod.ALEXANDER_WHITNEY)

    def test_periodic(self):
        resolution = cyclic_periodic_resolution(builtin_group("C3"), 3, (-5, 5))
        for r, s in product((-2, -1, 0, 1, 2, 3), (-2, -1, 0, 1, 2)):
            self.assertChainCell(resolution, r, s)

    def test_periodic_even_order(self):
        resolution = cyclic_periodic_resolution(builtin_group("C4"), 2, (-4, 4))
        for r, s in product((-1, 0, 1, 2), (-1, 1, 2)):
            self.assertChainCell(resolution, r, s, DiagonalMethod.PERIODIC)

    def test_lifted(self):
        workspace = TateWorkspace(builtin_group("S3"), 3, (-4, 4), Backend.REDUCED)
        for r, s in ((1, 1), (0, 2), (-1, 1), (2, -2), (-1, -1)):
            self.assertChainCell(workspace.resolution, r, s)
            self.assertEqual(diagonal_component(workspace.resolution, r, s).method, DiagonalMethod.LIFTED)

    def test_augmentation(self):
        """(ε ⊗ ε)Γ_{0,0} = ε: F_0(b_0) = 1 ⊗ π(b_0)."""
        resolution = cyclic_periodic_resolution(builtin_group("C3"), 3, (-3, 3))
        component = diagonal_component(resolution, 0, 0)
        self.assertEqual(component.quotient.module.dim, 1)
        self.assertNotEqual(int(component.values[0].sum() % 3), 0)

    def test_is_cached(self):
        resolution = cyclic_periodic_resolution(builtin_group("C2"), 2, (-3, 3))
        self.assertIs(diagonal_component(resolution, 1, 1), diagonal_component(resolution, 1, 1))

    def test_unavailable(self):
        resolution = cyclic_periodic_resolution(builtin_group("C3"), 3, (-3, 3))
        with self.assertRaises(DiagonalUnavailableException):
            diagonal_component(resolution, 1, 1, DiagonalMethod.ALEXANDER_WHITNEY)
        bar = standard_complete_resolution(builtin_group("C3"), 3, (-3, 3))
        with self.assertRaises(DiagonalUnavailableException):
            diagonal_component(bar, -1, 1, DiagonalMethod.ALEXANDER_WHITNEY)
        with self.assertRaises(DiagonalUnavailableException):
            diagonal_component(bar, 1, 1, DiagonalMethod.PERIODIC)


class TestCyclicProducts(TestCase):
    """Тесты для cup() над C3, p = 3."""

    @classmethod
    def setUpClass(cls):
        cls.workspace = TateWorkspace(builtin_group("C3"), 3, (-5, 5))
        cls.resolution = cls.workspace.resolution
        cls.unit = unit_class(cls.resolution, cls.workspace.trivial)

    def generator(self, n):
        return self.workspace.space(n).basis_class(0)

    def test_unit(self):
        for n in range(-4, 5):
            a = self.generator(n)
            self.assertEqual(cup(self.unit, a), a, msg=n)
            self.assertEqual(cup(a, self.unit), a, msg=n)

    def test_first_class_squares_to_zero(self):
        """w₁w₁ = -w₁w₁, поэтому w₁² = 0."""
        self.assertTrue(cup(self.generator(1), self.generator(1)).is_zero())

    def test_periodicity_class_is_invertible(self):
        w2 = self.generator(2)
        self.assertFalse(cup(w2, self.generator(-2)).is_zero())
        self.assertFalse(cup(w2, w2).is_zero())
        self.assertFalse(cup(self.generator(1), w2).is_zero())

    def test_graded_commutativity(self):
        for i, j in product(range(-3, 4), repeat=2):
            if abs(i + j) > 4:
                continue
            a, b = self.generator(i), self.generator(j)
            self.assertEqual(cup(a, b), cup(b, a).scale((-1) ** (i * j)), msg=f"({i}, {j})")

    def test_associativity(self):
        for i, j, k in ((1, 1, 2), (2, -1, 1), (-2, 1, 2), (1, -3, 2)):
            a, b, c = self.generator(i), self.generator(j), self.generator(k)
            self.assertEqual(cup(cup(a, b), c), cup(a, cup(b, c)), msg=f"({i}, {j}, {k})")

    def test_periodic_agrees_with_lifted(self):
        for i, j in product(range(-2, 3), repeat=2):
            a, b = self.generator(i), self.generator(j)
            self.assertEqual(
                cup(a, b, method=DiagonalMethod.PERIODIC),
                cup(a, b, method=DiagonalMethod.LIFTED),
                msg=f"({i}, {j})",
            )


class TestBarProducts(TestCase):
    """Тесты для cup() на стандартной резольвенте."""

    def test_alexander_whitney_agrees_with_lifted(self):
        group = builtin_group("C3")
        resolution = standard_complete_resolution(group, 3, (-3, 3))
        k = trivial_module(group, 3)
        for i, j in ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)):
            a = tate_cohomology(resolution, k, i).basis_class(0)
            b = tate_cohomology(resolution, k, j).basis_class(0)
            self.assertEqual(
                cup(a, b, method=DiagonalMethod.ALEXANDER_WHITNEY),
                cup(a, b, method=DiagonalMethod.LIFTED),
                msg=f"({i}, {j})",
            )

    def test_klein_four_squares(self):
        """Ĥ*(C2×C2, F2) в положительных степенях есть k[u, v]: квадраты образующих степени 1 независимы."""
        group = builtin_group("C2xC2")
        resolution = standard_complete_resolution(group, 2, (-3, 3))
        k = trivial_module(group, 2)
        first = tate_cohomology(resolution, k, 1)
        self.assertEqual(first.dim, 2)
        u, v = first.basis_class(0), first.basis_class(1)
        squares = [cup(u, u), cup(u, v), cup(v, v)]
        stacked = FpMatrix.from_columns(2, [square.coordinates for square in squares], 3)
        self.assertEqual(squares[0].space.dim, 3)
        self.assertEqual(rank(stacked), 3)


class TestS3Products(TestCase):
    """Тесты для cup() над S3, p = 3."""

    @classmethod
    def setUpClass(cls):
        cls.group = builtin_group("S3")
        cls.workspace = TateWorkspace(cls.group, 3, (-8, 8), Backend.REDUCED)
        cls.resolution = cls.workspace.resolution
        cls.normal = cls.group.subgroup([0, 1, 3])
        cls.whole = cls.group.whole()

    def test_degree_seven(self):
        """x ∈ Ĥ³, z ∈ Ĥ⁴: xz порождает Ĥ⁷."""
        x = self.workspace.space(3).basis_class(0)
        z = self.workspace.space(4).basis_class(0)
        self.assertFalse(cup(x, z).is_zero())
        self.assertEqual(cup(x, z), cup(z, x))
        self.assertTrue(cup(x, x).is_zero())

    def test_periodicity_generator_is_invertible(self):
        z = self.workspace.space(4).basis_class(0)
        self.assertFalse(cup(z, self.workspace.space(-4).basis_class(0)).is_zero())

    def test_unit(self):
        unit = unit_class(self.resolution, self.workspace.trivial)
        for n in (-4, -1, 0, 3, 4):
            a = self.workspace.space(n).basis_class(0)
            self.assertEqual(cup(unit, a), a, msg=n)

    def test_restriction_is_multiplicative(self):
        for i, j in ((3, 4), (-1, 4), (0, 3), (-4, 3)):
            a = self.workspace.space(i).basis_class(0)
            b = self.workspace.space(j).basis_class(0)
            self.assertEqual(
                restriction(cup(a, b), self.normal),
                cup(restriction(a, self.normal), restriction(b, self.normal)),
                msg=f"({i}, {j})",
            )

    def test_frobenius_reciprocity(self):
        """cor(β ⌣ res α) = cor β ⌣ α и cor(res α ⌣ β) = α ⌣ cor β."""
        for i, j in ((3, 4), (2, 4), (1, 3), (-2, 4), (1, -1)):
            beta = self.workspace.space(i, subgroup=self.normal).basis_class(0)
            for k in range(self.workspace.dimension(j)):
                alpha = self.workspace.space(j).basis_class(k)
                self.assertEqual(
                    corestriction(cup(beta, restriction(alpha, self.normal)), self.whole),
                    cup(corestriction(beta, self.whole), alpha),
                    msg=f"({i}, {j})",
                )
                self.assertEqual(
                    corestriction(cup(restriction(alpha, self.normal), beta), self.whole),
                    cup(alpha, corestriction(beta, self.whole)),
                    msg=f"({j}, {i})",
                )

    def test_conjugation_is_multiplicative(self):
        for i, j in ((1, 2), (2, 2), (1, -2), (3, 1)):
            a = self.workspace.space(i, subgroup=self.normal).basis_class(0)
            b = self.workspace.space(j, subgroup=self.normal).basis_class(0)
            self.assertEqual(conjugation(2, cup(a, b)), cup(conjugation(2, a), conjugation(2, b)), msg=f"({i}, {j})")

    def test_space_mismatch(self):
        a = self.workspace.space(1, subgroup=self.normal).basis_class(0)
        b = self.workspace.space(3).basis_class(0)
        with self.assertRaises(SpaceMismatchException):
            cup(a, b)

    def test_pairing_required(self):
        conj = conjugation_module(self.group, 3)
        a = self.workspace.space(0, conj).basis_class(0)
        with self.assertRaises(PairingMismatchException):
            cup(a, a)

    def test_representative_independence(self):
        """Сдвиг представителя на кограницу не меняет произведение в Ĥ⁰(S3, kS3)."""
        pairing = multiplication_pairing(self.group, 3)
        space = self.workspace.space(0, pairing.left)
        boundary = space.complex.coboundary(-1)
        column = next(i for i in range(boundary.cols) if boundary.data[:, i].any())
        x = space.basis_class(0)
        shifted = space.class_of(np.mod(x.representative + boundary.column(column), 3))
        self.assertEqual(shifted, x)
        for k in range(space.dim):
            y = space.basis_class(k)
            self.assertEqual(cup(shifted, y, pairing), cup(x, y, pairing), msg=k)
            self.assertEqual(cup(y, shifted, pairing), cup(y, x, pairing), msg=k)
