from ...core.common import StringEnum


class LinalgErrorCode(StringEnum):
    """Коды ошибок linalg."""

    INVALID_PRIME = "LIN_INVALID_PRIME"
    INVALID_MATRIX = "LIN_INVALID_MATRIX"
    SHAPE_MISMATCH = "LIN_SHAPE_MISMATCH"
    SUBSPACE_NOT_CONTAINED = "LIN_SUBSPACE_NOT_CONTAINED"

    LINALG_INVARIANT_VIOLATED = "LIN_INVARIANT_VIOLATED"


class GroupsErrorCode(StringEnum):
    """Коды ошибок groups."""

    INVALID_GROUP_SPEC = "GRP_INVALID_GROUP_SPEC"
    NOT_LATIN_SQUARE = "GRP_NOT_LATIN_SQUARE"
    NOT_ASSOCIATIVE = "GRP_NOT_ASSOCIATIVE"
    GENERATOR_CLOSURE = "GRP_GENERATOR_CLOSURE"
    GROUP_TOO_LARGE = "GRP_GROUP_TOO_LARGE"
    UNKNOWN_GROUP = "GRP_UNKNOWN_GROUP"
    NOT_A_SUBGROUP = "GRP_NOT_A_SUBGROUP"
    INVALID_ACTION = "GRP_INVALID_ACTION"
    INVALID_PRODUCT_DATUM = "GRP_INVALID_PRODUCT_DATUM"

    PRODUCT_DATUM_INCONSISTENT = "GRP_PRODUCT_DATUM_INCONSISTENT"


class ModulesErrorCode(StringEnum):
    """Коды ошибок kgmodules."""

    INVALID_MODULE = "MOD_INVALID_MODULE"
    INVALID_PAIRING = "MOD_INVALID_PAIRING"
    GROUP_MISMATCH = "MOD_GROUP_MISMATCH"


class ResolutionsErrorCode(StringEnum):
    """Коды ошибок resolutions."""

    INVALID_WINDOW = "RES_INVALID_WINDOW"
    WINDOW_EXHAUSTED = "RES_WINDOW_EXHAUSTED"
    BACKEND_UNAVAILABLE = "RES_BACKEND_UNAVAILABLE"
    NOT_A_COCYCLE = "RES_NOT_A_COCYCLE"
    SPACE_MISMATCH = "RES_SPACE_MISMATCH"
    SIZE_BUDGET_EXCEEDED = "RES_SIZE_BUDGET_EXCEEDED"

    RESOLUTION_INVARIANT_VIOLATED = "RES_INVARIANT_VIOLATED"
    LIFT_INCONSISTENT = "RES_LIFT_INCONSISTENT"


class MapsErrorCode(StringEnum):
    """Коды ошибок maps."""

    NOT_A_SUBGROUP = "MAP_NOT_A_SUBGROUP"
    STABILIZER_VIOLATION = "MAP_STABILIZER_VIOLATION"
    SPACE_MISMATCH = "MAP_SPACE_MISMATCH"

    MAP_NOT_WELL_DEFINED = "MAP_NOT_WELL_DEFINED"


class CupErrorCode(StringEnum):
    """Коды ошибок cup."""

    PAIRING_MISMATCH = "CUP_PAIRING_MISMATCH"
    SPACE_MISMATCH = "CUP_SPACE_MISMATCH"
    DIAGONAL_UNAVAILABLE = "CUP_DIAGONAL_UNAVAILABLE"

    PRODUCT_NOT_COCYCLE = "CUP_PRODUCT_NOT_COCYCLE"


class DecompErrorCode(StringEnum):
    """Коды ошибок decomp."""

    NOT_ABELIAN = "DEC_NOT_ABELIAN"
    INVALID_ORBIT = "DEC_INVALID_ORBIT"
    SPACE_MISMATCH = "DEC_SPACE_MISMATCH"
    INVALID_DOUBLE_COSETS = "DEC_INVALID_DOUBLE_COSETS"
    NOT_IN_DEGREE_ZERO = "DEC_NOT_IN_DEGREE_ZERO"

    DECOMPOSITION_INCONSISTENT = "DEC_DECOMPOSITION_INCONSISTENT"


class RingErrorCode(StringEnum):
    """Коды ошибок ringpres."""

    UNKNOWN_GENERATOR = "RNG_UNKNOWN_GENERATOR"
    RELATION_SYNTAX = "RNG_RELATION_SYNTAX"
    WINDOW_TOO_SMALL = "RNG_WINDOW_TOO_SMALL"
    NAMING_UNAVAILABLE = "RNG_NAMING_UNAVAILABLE"

    NORMALIZATION_FAILED = "RNG_NORMALIZATION_FAILED"


class JobsErrorCode(StringEnum):
    """Коды ошибок jobs."""

    INVALID_JOB = "JOB_INVALID_JOB"
    UNREADABLE_FILE = "JOB_UNREADABLE_FILE"
    VERIFICATION_FAILED = "JOB_VERIFICATION_FAILED"

    JOB_SERVICE_ERROR = "JOB_SERVICE_ERROR"
