"""Точная плотная линейная алгебра над простым полем F_p.

Все матрицы хранятся как numpy-массивы int64 с вычетами в [0, p). Исключение гарантируется
ограничением p < 2^31: произведение двух вычетов помещается в int64.
"""

from dataclasses import dataclass
from typing import Iterable, NoReturn

from typing_extensions import Self

import numpy as np

from .exceptions import (
    InvalidMatrixException,
    LinalgInvariantException,
    ShapeMismatchException,
    SubspaceNotContainedException,
)
from .types import PivotColumns
from ..types import Prime, Vector
from ..validators import validate_prime


@dataclass(slots=True, frozen=True, eq=False)
class FpMatrix:
    """Матрица над F_p.

    Attributes:
        p: Характеристика поля.
        data: Вычеты в построчном порядке, форма (rows, cols).
    """

    p: Prime
    data: np.ndarray

    def __post_init__(self) -> None:
        validate_prime(self.p)
        array = np.asarray(self.data)
        if array.ndim != 2:
            raise InvalidMatrixException(
                key="linalg.errors.invalid_matrix",
                fallback=f"Matrix data must be two-dimensional, got {array.ndim} dimensions",
            )
        if array.size and not np.issubdtype(array.dtype, np.integer):
            raise InvalidMatrixException(
                key="linalg.errors.invalid_matrix",
                fallback="Matrix entries must be integers",
            )
        reduced = np.mod(array.astype(np.int64, copy=True), self.p)
        reduced.setflags(write=False)
        object.__setattr__(self, "data", reduced)

    @classmethod
    def zeros(cls, p: Prime, rows: int, cols: int) -> Self:
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: Prime, size: int) -> Self:
        return cls(p, np.eye(size, dtype=np.int64))

    @classmethod
    def from_rows(cls, p: Prime, rows: Iterable[Iterable[int]], cols: int | None = None) -> Self:
        """Метод построения матрицы по списку строк.

        Args:
            p: Характеристика.
            rows: Строки матрицы.
            cols: Число столбцов для пустого списка строк.

        Returns:
            Матрица над F_p.
        """
        materialized = [list(row) for row in rows]
        if not materialized:
            return cls.zeros(p, 0, cols or 0)
        return cls(p, np.array(materialized, dtype=np.int64))

    @classmethod
    def from_columns(cls, p: Prime, columns: Iterable[Vector], size: int) -> Self:
        """Метод построения матрицы по списку столбцов.

        Args:
            p: Характеристика.
            columns: Векторы-столбцы.
            size: Размерность объемлющего пространства (для пустого списка).

        Returns:
            Матрица size × len(columns).
        """
        materialized = [np.asarray(column, dtype=np.int64).reshape(-1) for column in columns]
        if not materialized:
            return cls.zeros(p, size, 0)
        return cls(p, np.stack(materialized, axis=1))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> Self:
        return type(self)(self.p, self.data.T)

    def column(self, index: int) -> Vector:
        return self.data[:, index].copy()

    def is_zero(self) -> bool:
        return not bool(self.data.any())

    def _check_same_field(self, other: "FpMatrix") -> None | NoReturn:
        if self.p != other.p:
            raise ShapeMismatchException(
                key="linalg.errors.shape_mismatch",
                fallback=f"Matrices over different fields: {self.p} and {other.p}",
            )

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatchException(
                key="linalg.errors.shape_mismatch",
                fallback=f"Cannot multiply {self.shape} by {other.shape}",
            )
        return FpMatrix(self.p, mat_mul(self.data, other.data, self.p))

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatchException(
                key="linalg.errors.shape_mismatch",
                fallback=f"Cannot add {self.shape} and {other.shape}",
            )
        return FpMatrix(self.p, self.data + other.data)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise ShapeMismatchException(
                key="linalg.errors.shape_mismatch",
                fallback=f"Cannot subtract {self.shape} and {other.shape}",
            )
        return FpMatrix(self.p, self.data - other.data)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(self.p, -self.data)

    def scale(self, factor: int) -> "FpMatrix":
        return FpMatrix(self.p, self.data * (factor % self.p))

    def apply(self, vector: Vector) -> Vector:
        """Метод применения матрицы к вектору.

        Args:
            vector: Вектор длины cols.

        Returns:
            Вектор длины rows.
        """
        column = np.asarray(vector, dtype=np.int64).reshape(-1, 1)
        if column.shape[0] != self.cols:
            raise ShapeMismatchException(
                key="linalg.errors.shape_mismatch",
                fallback=f"Vector of length {column.shape[0]} does not fit {self.shape}",
            )
        return mat_mul(self.data, column, self.p).reshape(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.shape})"


@dataclass(slots=True, frozen=True)
class RowEchelon:
    """Результат приведения к ступенчатому виду.

    Attributes:
        rank: Ранг.
        rref: Приведённая ступенчатая форма.
        pivot_cols: Номера ведущих столбцов.
    """

    rank: int
    rref: FpMatrix
    pivot_cols: PivotColumns


@dataclass(slots=True, frozen=True)
class Subquotient:
    """Базис фактора span(Z)/span(B) с проекцией на координаты.

    Attributes:
        reps: Представители (столбцы), дополняющие базис span(B) до базиса span(Z).
        projection: Матрица dim × n, переводящая вектор из span(Z) в координаты фактора.
        boundary_dim: Размерность span(B).
    """

    reps: FpMatrix
    projection: FpMatrix
    boundary_dim: int

    @property
    def dim(self) -> int:
        return self.reps.cols

    def project(self, vector: Vector) -> Vector:
        return self.projection.apply(vector)


def mat_mul(left: np.ndarray, right: np.ndarray, p: Prime) -> np.ndarray:
    """Произведение матриц вычетов по модулю p.

    Для больших p произведение считается блоками по внутреннему индексу, чтобы суммы не переполняли int64.

    Args:
        left: Левая матрица.
        right: Правая матрица.
        p: Характеристика.

    Returns:
        Произведение с элементами в [0, p).
    """
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    inner = left.shape[-1]
    if inner == 0:
        return np.zeros(left.shape[:-1] + right.shape[1:], dtype=np.int64)
    chunk = max(1, (2**62) // max(1, (p - 1) ** 2))
    if inner <= chunk:
        return np.mod(left @ right, p)
    result = np.zeros(left.shape[:-1] + right.shape[1:], dtype=np.int64)
    for start in range(0, inner, chunk):
        stop = min(inner, start + chunk)
        result = np.mod(result + np.mod(left[..., start:stop] @ right[start:stop], p), p)
    return result


def _row_reduce(data: np.ndarray, p: Prime, limit: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Приведение массива к приведённому ступенчатому виду.

    Ведущий элемент: первый ненулевой в столбце (детерминированный выбор).

    Args:
        data: Массив вычетов.
        p: Характеристика.
        limit: Ведущие столбцы ищутся только среди первых limit столбцов.

    Returns:
        Пара (rref, номера ведущих столбцов).
    """
    matrix = np.mod(np.array(data, dtype=np.int64, copy=True), p)
    n_rows, n_cols = matrix.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols if limit is None else limit):
        if row >= n_rows:
            break
        nonzero = np.flatnonzero(matrix[row:, col])
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            matrix[[row, pivot]] = matrix[[pivot, row]]
        inv = pow(int(matrix[row, col]), -1, p)
        matrix[row] = np.mod(matrix[row] * inv, p)
        factors = matrix[:, col].copy()
        factors[row] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            matrix[targets] = np.mod(matrix[targets] - np.outer(factors[targets], matrix[row]), p)
        pivots.append(col)
        row += 1
    return matrix, pivots


def rank_and_rref(matrix: FpMatrix) -> RowEchelon:
    """Метод приведения матрицы к приведённому ступенчатому виду.

    Args:
        matrix: Матрица над F_p.

    Returns:
        Ранг, rref и ведущие столбцы.
    """
    reduced, pivots = _row_reduce(matrix.data, matrix.p)
    return RowEchelon(rank=len(pivots), rref=FpMatrix(matrix.p, reduced), pivot_cols=tuple(pivots))


def rank(matrix: FpMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return len(_row_reduce(matrix.data, matrix.p)[1])


def solve_columns(matrix: FpMatrix, rhs: FpMatrix) -> FpMatrix | None:
    """Метод решения A·X = B для всех столбцов B одновременно.

    Свободные переменные полагаются равными нулю.

    Args:
        matrix: Матрица A.
        rhs: Матрица правых частей B.

    Returns:
        Решение X или None, если хотя бы один столбец B вне образа A.
    """
    if matrix.p != rhs.p or matrix.rows != rhs.rows:
        raise ShapeMismatchException(
            key="linalg.errors.shape_mismatch",
            fallback=f"Right-hand side {rhs.shape} does not fit {matrix.shape}",
        )
    p = matrix.p
    augmented = np.concatenate([matrix.data, rhs.data], axis=1)
    reduced, pivots = _row_reduce(augmented, p, limit=matrix.cols)
    rank_ = len(pivots)
    if reduced[rank_:, matrix.cols :].any():
        return None
    solution = np.zeros((matrix.cols, rhs.cols), dtype=np.int64)
    for row, col in enumerate(pivots):
        solution[col] = reduced[row, matrix.cols :]
    return FpMatrix(p, solution)


def solve(matrix: FpMatrix, rhs: Vector) -> Vector | None:
    """Метод решения системы A·x = b.

    Args:
        matrix: Матрица A.
        rhs: Столбец b.

    Returns:
        Решение со свободными переменными, равными нулю, или None, если b вне образа A.
    """
    column = FpMatrix(matrix.p, np.asarray(rhs, dtype=np.int64).reshape(-1, 1))
    solution = solve_columns(matrix, column)
    return None if solution is None else solution.data[:, 0].copy()


def kernel_basis(matrix: FpMatrix) -> FpMatrix:
    """Метод построения базиса ядра.

    Args:
        matrix: Матрица A.

    Returns:
        Матрица, столбцы которой образуют базис ker A (по одному на свободный столбец, в порядке столбцов).

    Raises:
        LinalgInvariantException: Если нарушено равенство rank + nullity = cols.
    """
    p = matrix.p
    reduced, pivots = _row_reduce(matrix.data, p)
    pivot_set = set(pivots)
    free = [col for col in range(matrix.cols) if col not in pivot_set]
    basis = np.zeros((matrix.cols, len(free)), dtype=np.int64)
    pivot_index = np.array(pivots, dtype=np.int64)
    for k, col in enumerate(free):
        basis[col, k] = 1
        if pivots:
            basis[pivot_index, k] = np.mod(-reduced[: len(pivots), col], p)
    if len(free) + len(pivots) != matrix.cols:
        raise LinalgInvariantException(
            key="linalg.errors.invariant_violated",
            fallback=f"Rank-nullity violated: {len(pivots)} + {len(free)} != {matrix.cols}",
        )
    return FpMatrix(p, basis)


def independent_columns(matrix: FpMatrix) -> PivotColumns:
    """Номера столбцов, жадно образующих базис пространства столбцов."""
    if matrix.rows == 0 or matrix.cols == 0:
        return ()
    return tuple(_row_reduce(matrix.data, matrix.p)[1])


def image_basis(matrix: FpMatrix) -> FpMatrix:
    """Метод построения базиса образа из столбцов самой матрицы.

    Args:
        matrix: Матрица A.

    Returns:
        Линейно независимые столбцы A, порождающие её образ.
    """
    columns = list(independent_columns(matrix))
    return FpMatrix(matrix.p, matrix.data[:, columns])


def inverse(matrix: FpMatrix) -> FpMatrix:
    """Метод обращения квадратной матрицы.

    Args:
        matrix: Квадратная матрица.

    Returns:
        Обратная матрица.

    Raises:
        InvalidMatrixException: Если матрица не квадратная или вырождена.
    """
    if matrix.rows != matrix.cols:
        raise InvalidMatrixException(
            key="linalg.errors.not_invertible",
            fallback=f"Matrix of shape {matrix.shape} is not square",
        )
    size = matrix.rows
    augmented = np.concatenate([matrix.data, np.eye(size, dtype=np.int64)], axis=1)
    reduced, pivots = _row_reduce(augmented, matrix.p, limit=size)
    if len(pivots) != size:
        raise InvalidMatrixException(
            key="linalg.errors.not_invertible",
            fallback="Matrix is singular",
        )
    return FpMatrix(matrix.p, reduced[:, size:])


def in_span(matrix: FpMatrix, vector: Vector) -> bool:
    """Проверка принадлежности вектора пространству столбцов."""
    return solve(matrix, vector) is not None


def subquotient_basis(cycles: FpMatrix, boundaries: FpMatrix) -> Subquotient:
    """Метод построения базиса фактора span(Z)/span(B).

    Процесс включает:
    1. Проверку span(B) ⊆ span(Z)
    2. Жадный выбор независимых столбцов матрицы [B | Z]: сначала базис span(B), затем представители
    3. Левый обратный к матрице [базис B | представители] по невырожденному квадратному минору

    Args:
        cycles: Столбцы, порождающие Z.
        boundaries: Столбцы, порождающие B.

    Returns:
        Представители классов и проекция на координаты фактора.

    Raises:
        SubspaceNotContainedException: Если B не содержится в span(Z).
    """
    if cycles.rows != boundaries.rows or cycles.p != boundaries.p:
        raise ShapeMismatchException(
            key="linalg.errors.shape_mismatch",
            fallback=f"Ambient dimensions differ: {cycles.rows} and {boundaries.rows}",
        )
    p = cycles.p
    ambient = cycles.rows
    combined = FpMatrix(p, np.concatenate([boundaries.data, cycles.data], axis=1))
    chosen = independent_columns(combined)
    boundary_cols = [col for col in chosen if col < boundaries.cols]
    rep_cols = [col for col in chosen if col >= boundaries.cols]
    if rank(cycles) != len(chosen):
        raise SubspaceNotContainedException(
            key="linalg.errors.subspace_not_contained",
            fallback="Boundary span is not contained in the cycle span",
        )

    basis = combined.data[:, boundary_cols + rep_cols]
    size = basis.shape[1]
    projection = np.zeros((len(rep_cols), ambient), dtype=np.int64)
    if size:
        rows = list(independent_columns(FpMatrix(p, basis.T)))
        left_inverse = inverse(FpMatrix(p, basis[rows, :]))
        projection[:, rows] = left_inverse.data[len(boundary_cols) :, :]
    return Subquotient(
        reps=FpMatrix(p, combined.data[:, rep_cols]) if rep_cols else FpMatrix.zeros(p, ambient, 0),
        projection=FpMatrix(p, projection),
        boundary_dim=len(boundary_cols),
    )


def mod_einsum(p: Prime, subscripts: str, *operands: np.ndarray) -> np.ndarray:
    """Свёртка numpy.einsum по модулю p.

    Свёртка выполняется в int64, если произведение вычетов всех операндов меньше 2^39 (суммы до 2^24 слагаемых
    не переполняются), иначе в целых Python.

    Args:
        p: Характеристика.
        subscripts: Спецификация свёртки einsum.
        operands: Массивы вычетов.

    Returns:
        Результат с элементами в [0, p).
    """
    if (p - 1) ** len(operands) < 2**39:
        return np.mod(np.einsum(subscripts, *(np.asarray(op, dtype=np.int64) for op in operands)), p)
    result = np.einsum(subscripts, *(np.asarray(op, dtype=np.int64).astype(object) for op in operands))
    return np.mod(result, p).astype(np.int64)
