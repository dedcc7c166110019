import numpy as np

from .module import KGModule, dual
from ..linalg import FpMatrix, mat_mul


def trivial_summand_projection(module: KGModule) -> FpMatrix | None:
    """Функция поиска эквивариантного проектора M → k → M на тривиальное прямое слагаемое.

    Тривиальное слагаемое существует тогда и только тогда, когда найдутся инвариант v ∈ M^G
    и инвариантный функционал φ с φ(v) ≠ 0; тогда P = v·φ / φ(v).

    Args:
        module: Модуль M.

    Returns:
        Проектор P (P² = P, P·g = g·P) ранга 1 или None.
    """
    p = module.p
    invariants = module.fixed_subspace()
    functionals = dual(module).fixed_subspace()
    if invariants.cols == 0 or functionals.cols == 0:
        return None
    values = mat_mul(functionals.data.T, invariants.data, p)
    nonzero = np.argwhere(values != 0)
    if nonzero.size == 0:
        return None
    row, col = (int(v) for v in nonzero[0])
    vector = invariants.data[:, col].reshape(-1, 1)
    functional = functionals.data[:, row].reshape(1, -1)
    scale = pow(int(values[row, col]), -1, p)
    return FpMatrix(p, mat_mul(vector, functional, p) * scale)
