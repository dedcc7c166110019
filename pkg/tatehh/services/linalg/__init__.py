from .matrix import (
    FpMatrix,
    RowEchelon,
    Subquotient,
    image_basis,
    in_span,
    independent_columns,
    inverse,
    kernel_basis,
    mat_mul,
    mod_einsum,
    rank,
    rank_and_rref,
    solve,
    solve_columns,
    subquotient_basis,
)

__all__ = [
    "FpMatrix",
    "RowEchelon",
    "Subquotient",
    "image_basis",
    "in_span",
    "independent_columns",
    "inverse",
    "kernel_basis",
    "mat_mul",
    "mod_einsum",
    "rank",
    "rank_and_rref",
    "solve",
    "solve_columns",
    "subquotient_basis",
]
