from .cochain_maps import (
    conjugate_cochain,
    corestrict_cochain,
    pi_cochain,
    restrict_cochain,
    theta_cochain,
    translate_expanded,
)
from .induced import (
    CohomologyMap,
    conjugation,
    conjugation_map,
    corestriction,
    corestriction_map,
    identity_map,
    pi_map,
    pi_push,
    restriction,
    restriction_map,
    theta_map,
    theta_push,
    zero_map,
)
from .types import Provenance

__all__ = (
    "CohomologyMap",
    "Provenance",
    "conjugate_cochain",
    "conjugation",
    "conjugation_map",
    "corestrict_cochain",
    "corestriction",
    "corestriction_map",
    "identity_map",
    "pi_cochain",
    "pi_map",
    "pi_push",
    "restrict_cochain",
    "restriction",
    "restriction_map",
    "theta_cochain",
    "theta_map",
    "theta_push",
    "translate_expanded",
    "zero_map",
)
