from itertools import product
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from tatehh.services.linalg import (
    FpMatrix,
    inverse,
    kernel_basis,
    rank,
    rank_and_rref,
    solve,
    subquotient_basis,
)
from tatehh.services.linalg.exceptions import (
    InvalidMatrixException,
    InvalidPrimeException,
    SubspaceNotContainedException,
)

PRIMES = st.sampled_from([2, 3, 5, 7])


@st.composite
def matrices(draw, max_rows: int = 6, max_cols: int = 6):
    p = draw(PRIMES)
    rows = draw(st.integers(min_value=0, max_value=max_rows))
    cols = draw(st.integers(min_value=0, max_value=max_cols))
    entries = draw(st.lists(st.integers(min_value=0, max_value=p - 1), min_size=rows * cols, max_size=rows * cols))
    return FpMatrix(p, np.array(entries, dtype=np.int64).reshape(rows, cols))


class TestFpMatrix(TestCase):
    """Тесты для FpMatrix."""

    def test_entries_are_reduced(self):
        """Элементы приводятся в [0, p)."""
        matrix = FpMatrix(3, np.array([[4, -1], [3, 7]]))
        self.assertEqual(matrix.data.tolist(), [[1, 2], [0, 1]])

    def test_rejects_non_prime(self):
        """Непростая характеристика отклоняется."""
        with self.assertRaises(InvalidPrimeException):
            FpMatrix(4, np.zeros((1, 1), dtype=np.int64))

    def test_rejects_one_dimensional_data(self):
        """Одномерные данные отклоняются."""
        with self.assertRaises(InvalidMatrixException):
            FpMatrix(3, np.zeros(3, dtype=np.int64))

    def test_matmul(self):
        left = FpMatrix(5, np.array([[1, 2], [3, 4]]))
        right = FpMatrix(5, np.array([[4, 0], [1, 1]]))
        self.assertEqual((left @ right).data.tolist(), [[1, 2], [1, 4]])


class TestRankAndRref(TestCase):
    """Тесты для rank_and_rref()."""

    def test_identity(self):
        """Единичная 3×3 над F_3: ранг 3, ведущие столбцы 0, 1, 2."""
        echelon = rank_and_rref(FpMatrix.identity(3, 3))
        self.assertEqual(echelon.rank, 3)
        self.assertEqual(echelon.pivot_cols, (0, 1, 2))

    def test_zero(self):
        """Нулевая 2×5 над F_2: ранг 0."""
        echelon = rank_and_rref(FpMatrix.zeros(2, 2, 5))
        self.assertEqual(echelon.rank, 0)
        self.assertTrue(echelon.rref.is_zero())

    def test_singular_two_by_two(self):
        """[[1,2],[2,1]] над F_3 имеет определитель 1 - 4 ≡ 0, значит ранг 1."""
        matrix = FpMatrix(3, np.array([[1, 2], [2, 1]]))
        det = (1 * 1 - 2 * 2) % 3
        self.assertEqual(det, 0)
        self.assertEqual(rank_and_rref(matrix).rank, 1)

    @given(matrices())
    @settings(max_examples=60, deadline=None)
    def test_rank_of_transpose(self, matrix):
        """rank(A) = rank(A^T)."""
        self.assertEqual(rank(matrix), rank(matrix.T))

    @given(matrices())
    @settings(max_examples=60, deadline=None)
    def test_rref_keeps_row_space(self, matrix):
        """Строки rref и A порождают одно пространство."""
        echelon = rank_and_rref(matrix)
        stacked = FpMatrix(matrix.p, np.concatenate([matrix.data, echelon.rref.data], axis=0))
        self.assertEqual(rank(stacked), echelon.rank)
        self.assertLessEqual(echelon.rank, min(matrix.rows, matrix.cols))


class TestSolve(TestCase):
    """Тесты для solve()."""

    def test_identity(self):
        b = np.array([1, 2, 0])
        self.assertEqual(solve(FpMatrix.identity(3, 3), b).tolist(), [1, 2, 0])

    def test_zero_matrix_without_solution(self):
        self.assertIsNone(solve(FpMatrix.zeros(3, 2, 2), np.array([1, 0])))

    def test_free_variables_are_zero(self):
        """Свободные переменные полагаются равными нулю."""
        matrix = FpMatrix(5, np.array([[1, 1, 0]]))
        self.assertEqual(solve(matrix, np.array([3])).tolist(), [3, 0, 0])

    def test_random_round_trip(self):
        """Случайная система 4×6 над F_5 с b = A·x0 решается."""
        rng = np.random.default_rng(7)
        matrix = FpMatrix(5, rng.integers(0, 5, size=(4, 6)))
        x0 = rng.integers(0, 5, size=6)
        b = matrix.apply(x0)
        x = solve(matrix, b)
        self.assertIsNotNone(x)
        self.assertEqual(matrix.apply(x).tolist(), b.tolist())

    @given(matrices(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_solution_satisfies_system(self, matrix, data):
        x0 = np.array(
            data.draw(st.lists(st.integers(0, matrix.p - 1), min_size=matrix.cols, max_size=matrix.cols)),
            dtype=np.int64,
        )
        b = matrix.apply(x0)
        x = solve(matrix, b)
        self.assertIsNotNone(x)
        self.assertTrue(np.array_equal(matrix.apply(x), b))


class TestKernelBasis(TestCase):
    """Тесты для kernel_basis()."""

    def test_identity_has_empty_kernel(self):
        self.assertEqual(kernel_basis(FpMatrix.identity(3, 4)).cols, 0)

    def test_zero_matrix_kernel_is_everything(self):
        basis = kernel_basis(FpMatrix.zeros(3, 3, 3))
        self.assertEqual(basis.data.tolist(), np.eye(3, dtype=int).tolist())

    def test_all_ones_row_over_two(self):
        """[[1,1]] над F_2: единственный ненулевой вектор ядра (1,1) находится перебором."""
        matrix = FpMatrix(2, np.array([[1, 1]]))
        kernel_vectors = [v for v in product(range(2), repeat=2) if any(v) and sum(v) % 2 == 0]
        self.assertEqual(kernel_vectors, [(1, 1)])
        self.assertEqual(kernel_basis(matrix).data[:, 0].tolist(), [1, 1])

    @given(matrices())
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, matrix):
        basis = kernel_basis(matrix)
        self.assertEqual(basis.cols + rank(matrix), matrix.cols)
        self.assertTrue((matrix @ basis).is_zero())
        self.assertEqual(rank(basis), basis.cols)


class TestInverse(TestCase):
    """Тесты для inverse()."""

    def test_inverse_times_matrix_is_identity(self):
        matrix = FpMatrix(7, np.array([[2, 3], [1, 4]]))
        self.assertEqual(inverse(matrix) @ matrix, FpMatrix.identity(7, 2))

    def test_singular_rejected(self):
        with self.assertRaises(InvalidMatrixException):
            inverse(FpMatrix(3, np.array([[1, 2], [2, 1]])))


class TestSubquotientBasis(TestCase):
    """Тесты для subquotient_basis()."""

    def test_empty_boundaries(self):
        """Z = стандартный базис F_3^2, B пусто: фактор размерности 2, проекция тождественна."""
        result = subquotient_basis(FpMatrix.identity(3, 2), FpMatrix.zeros(3, 2, 0))
        self.assertEqual(result.dim, 2)
        self.assertEqual(result.projection, FpMatrix.identity(3, 2))

    def test_equal_spaces(self):
        identity = FpMatrix.identity(3, 3)
        result = subquotient_basis(identity, identity)
        self.assertEqual(result.dim, 0)
        self.assertEqual(result.project(np.array([1, 2, 0])).size, 0)

    def test_exhaustive_coset_count(self):
        """F_2^3 / <(1,1,0)>: 8 векторов распадаются на 4 смежных класса."""
        boundary = np.array([1, 1, 0])
        cosets = {min(tuple(v), tuple((np.array(v) + boundary) % 2)) for v in product(range(2), repeat=3)}
        result = subquotient_basis(FpMatrix.identity(2, 3), FpMatrix(2, boundary.reshape(3, 1)))
        self.assertEqual(len(cosets), 4)
        self.assertEqual(2**result.dim, len(cosets))
        self.assertTrue(result.project(boundary).tolist() == [0, 0])

    def test_projection_properties(self):
        """Проекция обнуляет B и тождественна на представителях."""
        cycles = FpMatrix(5, np.array([[1, 0, 1], [0, 1, 1], [0, 0, 0], [2, 1, 3]]))
        boundaries = FpMatrix(5, np.array([[1], [1], [0], [3]]))
        result = subquotient_basis(cycles, boundaries)
        self.assertEqual(result.dim, 1)
        self.assertTrue((result.projection @ boundaries).is_zero())
        self.assertEqual(result.projection @ result.reps, FpMatrix.identity(5, 1))

    def test_rejects_boundary_outside_cycles(self):
        with self.assertRaises(SubspaceNotContainedException):
            subquotient_basis(FpMatrix(3, np.array([[1], [0]])), FpMatrix(3, np.array([[0], [1]])))
