from .module import (
    KGModule,
    conjugation_module,
    direct_sum,
    dual,
    free_module,
    induce,
    permutation_module,
    quotient,
    regular_module,
    restrict,
    tensor_product,
    trivial_module,
)
from .pairing import ModulePairing, multiplication_pairing, scalar_pairing
from .projection import trivial_summand_projection

__all__ = (
    "KGModule",
    "ModulePairing",
    "conjugation_module",
    "direct_sum",
    "dual",
    "free_module",
    "induce",
    "multiplication_pairing",
    "permutation_module",
    "quotient",
    "regular_module",
    "restrict",
    "scalar_pairing",
    "tensor_product",
    "trivial_module",
    "trivial_summand_projection",
)
