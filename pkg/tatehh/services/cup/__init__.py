from .diagonal import DiagonalComponent, SyzygyQuotient, diagonal_component, select_method, syzygy_quotient
from .product import cup, product_cochain, unit_class
from .types import DiagonalMethod

__all__ = (
    "DiagonalComponent",
    "DiagonalMethod",
    "SyzygyQuotient",
    "cup",
    "diagonal_component",
    "product_cochain",
    "select_method",
    "syzygy_quotient",
    "unit_class",
)
