from .constants import IDENTITY_DEGREES
from .lattice import is_normal, subgroup_lattice
from .sampling import sample_cases
from .suite import CHECKS, PropertySuite, run_property_suite
from .types import PropertyFamily, PropertyVerdict

__all__ = (
    "CHECKS",
    "IDENTITY_DEGREES",
    "PropertyFamily",
    "PropertySuite",
    "PropertyVerdict",
    "is_normal",
    "run_property_suite",
    "sample_cases",
    "subgroup_lattice",
)
