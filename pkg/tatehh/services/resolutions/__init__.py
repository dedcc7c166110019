from .backends import (
    complete_resolution,
    cyclic_periodic_resolution,
    default_window,
    reduced_complete_resolution,
    select_backend,
    standard_complete_resolution,
)
from .cochains import CochainComplex, coboundary_matrix
from .cohomology import CohomologyClass, CohomologySpace, TateWorkspace, tate_cohomology
from .complete import CompleteResolution
from .free_maps import FreeMap
from .lifting import ChainLift, act_on_tensor, chain_lift, comparison_map
from .ordinary import ordinary_cohomology, ordinary_homology
from .types import Backend

__all__ = (
    "Backend",
    "ChainLift",
    "CochainComplex",
    "CohomologyClass",
    "CohomologySpace",
    "CompleteResolution",
    "FreeMap",
    "TateWorkspace",
    "act_on_tensor",
    "chain_lift",
    "coboundary_matrix",
    "comparison_map",
    "complete_resolution",
    "cyclic_periodic_resolution",
    "default_window",
    "ordinary_cohomology",
    "ordinary_homology",
    "reduced_complete_resolution",
    "select_backend",
    "standard_complete_resolution",
    "tate_cohomology",
)
