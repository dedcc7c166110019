from itertools import product
from unittest import TestCase

import numpy as np

from tatehh.services.cup import cup
from tatehh.services.decomp import (
    RepresentativeChoice,
    abelian_ring,
    assemble,
    assemble_decomposed,
    build_context,
    center_element,
    decompose,
    decomposed_product,
    direct_oracle_product,
    module_action,
    product_formula,
)
from tatehh.services.decomp.exceptions import (
    InvalidDoubleCosetsException,
    InvalidOrbitException,
    NotAbelianException,
    NotInDegreeZeroException,
    SpaceMismatchException,
)
from tatehh.services.groups import builtin_group
from tatehh.services.linalg import FpMatrix, kernel_basis, rank
from tatehh.services.maps import conjugation_map, corestriction, restriction, restriction_map
from tatehh.services.resolutions import Backend, default_window

S3_TOTALS = dict(zip(range(-4, 5), (2, 1, 1, 2, 2, 1, 1, 2, 2)))


def local_basis(context, i, n):
    space = context.local_space(i, n)
    return [space.basis_class(index) for index in range(space.dim)]


class TestS3Context(TestCase):
    """Тесты для разложения Ĥ*(S3, kS3), p = 3."""

    @classmethod
    def setUpClass(cls):
        cls.group = builtin_group("S3")
        cls.context = build_context(cls.group, 3, (-8, 8), Backend.REDUCED)
        cls.normal = cls.group.subgroup([0, 1, 3])

    def test_orbits(self):
        context = self.context
        self.assertEqual([orbit.representative for orbit in context.orbits], [0, 1, 2])
        self.assertEqual([orbit.stabilizer.order for orbit in context.orbits], [6, 3, 2])
        self.assertEqual(sum(orbit.size for orbit in context.orbits), 6)
        self.assertEqual(context.orbit(1).stabilizer, self.normal)

    def test_dimensions(self):
        for n, total in S3_TOTALS.items():
            self.assertEqual(self.context.dimension(n), total, msg=n)
            self.assertEqual(self.context.space(n).dim, total, msg=n)
            self.assertEqual(self.context.local_dimensions(n)[2], 0, msg=n)

    def test_invalid_orbit(self):
        with self.assertRaises(InvalidOrbitException):
            self.context.orbit(3)

    def test_decompose_then_assemble(self):
        for n in range(-4, 5):
            space = self.context.space(n)
            for index in range(space.dim):
                zeta = space.basis_class(index)
                self.assertEqual(assemble_decomposed(self.context, decompose(self.context, zeta)), zeta, msg=n)

    def test_assemble_then_decompose(self):
        for n in range(-4, 5):
            for i in range(len(self.context.orbits)):
                for alpha in local_basis(self.context, i, n):
                    decomposed = decompose(self.context, assemble(self.context, i, alpha))
                    for j, component in enumerate(decomposed.components):
                        if j == i:
                            self.assertEqual(component, alpha, msg=f"n={n}, i={i}")
                        else:
                            self.assertTrue(component.is_zero(), msg=f"n={n}, i={i}, j={j}")

    def test_degree_one_lives_over_the_normal_subgroup(self):
        zeta = self.context.space(1).basis_class(0)
        decomposed = decompose(self.context, zeta)
        self.assertEqual(decomposed.components[0].space.dim, 0)
        self.assertFalse(decomposed.components[1].is_zero())
        self.assertEqual(decomposed.components[2].space.dim, 0)

    def test_unit(self):
        unit = self.context.unit()
        self.assertEqual(assemble(self.context, 0, self.context.local_unit(0)), unit)
        self.assertEqual(center_element(self.context, unit), {"1": 1})
        for n in (-3, 0, 1, 3):
            zeta = self.context.space(n).basis_class(0)
            self.assertEqual(direct_oracle_product(self.context, unit, zeta), zeta, msg=n)

    def test_class_sum_of_the_rotations(self):
        """E₂ = ψ₂(1) есть класс суммы a + a²."""
        e2 = assemble(self.context, 1, self.context.local_unit(1))
        space = self.context.space(0)
        cochain = np.zeros(space.cochain_dim, dtype=np.int64)
        cochain[[1, 3]] = 1
        self.assertEqual(space.class_of(cochain), e2)

    def test_center_element_requires_degree_zero(self):
        with self.assertRaises(NotInDegreeZeroException):
            center_element(self.context, self.context.space(3).basis_class(0))

    def test_space_mismatch(self):
        alpha = self.context.local_space(1, 0).basis_class(0)
        with self.assertRaises(SpaceMismatchException):
            assemble(self.context, 0, alpha)
        with self.assertRaises(SpaceMismatchException):
            decompose(self.context, alpha)

    def test_restriction_image_is_fixed_by_reflection(self):
        """Образ res^{S3}_N совпадает с подпространством, неподвижным относительно b*."""
        for n in range(-4, 5):
            space = self.context.local_space(0, n)
            res = restriction_map(space, self.normal)
            conj = conjugation_map(res.target, 2)
            difference = conj.matrix - FpMatrix.identity(3, res.target.dim)
            fixed = kernel_basis(difference)
            self.assertEqual(rank(res.matrix), fixed.cols, msg=n)
            self.assertFalse(np.any((difference @ res.matrix).data), msg=n)


class TestS3Products(TestCase):
    """Тесты для формулы произведения над S3, p = 3."""

    @classmethod
    def setUpClass(cls):
        cls.group = builtin_group("S3")
        cls.context = build_context(cls.group, 3, (-8, 8), Backend.REDUCED)
        context = cls.context
        cls.unit = context.unit()
        cls.w1 = context.local_space(1, 1).basis_class(0)
        cls.w2 = context.local_space(1, 2).basis_class(0)
        cls.e2 = assemble(context, 1, context.local_unit(1))
        cls.W1 = assemble(context, 1, cls.w1)
        cls.W2 = assemble(context, 1, cls.w2)
        cls.C = cls.e2 + cls.unit

    def test_oracle_equivalence(self):
        context = self.context
        for m, n in product(range(-2, 3), repeat=2):
            for i, j in product(range(len(context.orbits)), repeat=2):
                for alpha, beta in product(local_basis(context, i, m), local_basis(context, j, n)):
                    formula = product_formula(context, i, alpha, j, beta).total
                    oracle = direct_oracle_product(context, assemble(context, i, alpha), assemble(context, j, beta))
                    self.assertEqual(formula, oracle, msg=f"m={m}, n={n}, i={i}, j={j}")

    def test_idempotent_relation(self):
        """E₂² = E₂ − 1."""
        unit_n = self.context.local_unit(1)
        expected = self.e2 - self.unit
        self.assertEqual(product_formula(self.context, 1, unit_n, 1, unit_n).total, expected)
        self.assertEqual(direct_oracle_product(self.context, self.e2, self.e2), expected)

    def test_rotation_sum_negates_w1(self):
        """ψ₂(1) ⌣ ψ₂(w₁) = −W₁."""
        trace = product_formula(self.context, 1, self.context.local_unit(1), 1, self.w1)
        self.assertEqual(trace.total, -self.W1)
        self.assertEqual([summand.x for summand in trace.summands], [0, 2])

    def test_square_of_w2(self):
        """W₂² = ψ₂(b*(w₂²)) + ψ₁(cor(w₂ b*(w₂))) = zC при res z = w₂²."""
        context = self.context
        square = cup(self.w2, self.w2)
        expected = assemble(context, 1, square) + assemble(context, 0, corestriction(-square, context.whole))
        trace = product_formula(context, 1, self.w2, 1, self.w2)
        self.assertEqual(trace.total, expected)
        self.assertEqual([summand.k for summand in trace.summands], [1, 0])

        z = context.local_space(0, 4).basis_class(0)
        scale = restriction(z, context.orbit(1).stabilizer).coordinates[0] * pow(int(square.coordinates[0]), -1, 3)
        z = z.scale(pow(int(scale), -1, 3))
        self.assertEqual(restriction(z, context.orbit(1).stabilizer), square)
        self.assertEqual(direct_oracle_product(context, assemble(context, 0, z), self.C), trace.total)

    def test_radical_elements(self):
        """C² = 0, W₁² = 0, W₂³ = 0."""
        context = self.context
        self.assertTrue(direct_oracle_product(context, self.C, self.C).is_zero())
        self.assertTrue(decomposed_product(context, decompose(context, self.C), decompose(context, self.C)).is_zero())
        self.assertTrue(product_formula(context, 1, self.w1, 1, self.w1).total.is_zero())
        square = direct_oracle_product(context, self.W2, self.W2)
        self.assertFalse(square.is_zero())
        cube = decomposed_product(context, decompose(context, square), decompose(context, self.W2))
        self.assertTrue(cube.is_zero())
        self.assertEqual(direct_oracle_product(context, square, self.W2), cube)

    def test_choice_independence(self):
        context = self.context
        pairs = ((1, self.w1, 1, self.w2), (1, self.w2, 1, self.w2), (0, context.local_unit(0), 1, self.w1))
        for i, alpha, j, beta in pairs:
            least = product_formula(context, i, alpha, j, beta, RepresentativeChoice.LEAST)
            greatest = product_formula(context, i, alpha, j, beta, RepresentativeChoice.GREATEST)
            self.assertEqual(least.total, greatest.total, msg=f"({i}, {j})")
        explicit = product_formula(context, 1, self.w1, 1, self.w2, double_cosets=[3, 4])
        self.assertEqual(explicit.total, product_formula(context, 1, self.w1, 1, self.w2).total)

    def test_invalid_double_cosets(self):
        with self.assertRaises(InvalidDoubleCosetsException):
            product_formula(self.context, 1, self.w1, 1, self.w2, double_cosets=[0, 1])
        with self.assertRaises(InvalidDoubleCosetsException):
            product_formula(self.context, 1, self.w1, 1, self.w2, double_cosets=[0])

    def test_module_action(self):
        """ψ₁(α) ⌣ ψ_j(β) = ψ_j(res α ⌣ β)."""
        context = self.context
        for m, n in ((3, 1), (3, 2), (4, -1), (-1, 2), (0, 1)):
            for alpha, beta in product(local_basis(context, 0, m), local_basis(context, 1, n)):
                expected = product_formula(context, 0, alpha, 1, beta).total
                self.assertEqual(module_action(context, alpha, 1, beta), expected, msg=f"({m}, {n})")


class TestKleinProducts(TestCase):
    """Тесты для формулы произведения над C2×C2, p = 2."""

    @classmethod
    def setUpClass(cls):
        cls.context = build_context(builtin_group("C2xC2"), 2, (-5, 5))

    def test_orbits_are_points(self):
        self.assertEqual(len(self.context.orbits), 4)
        self.assertTrue(all(orbit.stabilizer.is_whole() for orbit in self.context.orbits))

    def test_oracle_equivalence(self):
        context = self.context
        for m, n in product(range(-2, 3), repeat=2):
            for i, j in product(range(4), repeat=2):
                for alpha, beta in product(local_basis(context, i, m), local_basis(context, j, n)):
                    formula = product_formula(context, i, alpha, j, beta).total
                    oracle = direct_oracle_product(context, assemble(context, i, alpha), assemble(context, j, beta))
                    self.assertEqual(formula, oracle, msg=f"m={m}, n={n}, i={i}, j={j}")


class TestAbelianRing(TestCase):
    """Тесты для abelian_ring()."""

    def test_cyclic_three(self):
        ring = abelian_ring(builtin_group("C3"), 3, default_window(3))
        self.assertEqual(set(ring.dimensions.values()), {3})
        self.assertEqual(sorted(ring.dimensions), list(range(-3, 4)))
        self.assertEqual(ring.structure, "kG ⊗ Ĥ*(G,k)")

    def test_cyclic_two(self):
        ring = abelian_ring(builtin_group("C2"), 2, default_window(3))
        self.assertEqual(set(ring.dimensions.values()), {2})

    def test_coprime_characteristic(self):
        ring = abelian_ring(builtin_group("C2xC2"), 3, default_window(2))
        self.assertEqual(set(ring.dimensions.values()), {0})

    def test_not_abelian(self):
        with self.assertRaises(NotAbelianException):
            abelian_ring(builtin_group("S3"), 3, default_window(1))
