from .abelian import abelian_ring
from .context import DecompositionContext, build_context
from .formula import (
    assemble,
    assemble_decomposed,
    center_element,
    decompose,
    decomposed_product,
    direct_oracle_product,
    module_action,
    product_formula,
    product_summand,
)
from .types import AbelianRing, DecomposedClass, Orbit, ProductSummand, ProductTrace, RepresentativeChoice

__all__ = (
    "AbelianRing",
    "DecomposedClass",
    "DecompositionContext",
    "Orbit",
    "ProductSummand",
    "ProductTrace",
    "RepresentativeChoice",
    "abelian_ring",
    "assemble",
    "assemble_decomposed",
    "build_context",
    "center_element",
    "decompose",
    "decomposed_product",
    "direct_oracle_product",
    "module_action",
    "product_formula",
    "product_summand",
)
