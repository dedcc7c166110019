from .algebra_error_code import (
    CupErrorCode,
    DecompErrorCode,
    GroupsErrorCode,
    JobsErrorCode,
    LinalgErrorCode,
    MapsErrorCode,
    ModulesErrorCode,
    ResolutionsErrorCode,
    RingErrorCode,
)

__all__ = (
    "CupErrorCode",
    "DecompErrorCode",
    "GroupsErrorCode",
    "JobsErrorCode",
    "LinalgErrorCode",
    "MapsErrorCode",
    "ModulesErrorCode",
    "ResolutionsErrorCode",
    "RingErrorCode",
)
