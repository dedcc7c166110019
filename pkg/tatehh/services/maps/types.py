from ...core.common import StringEnum


class Provenance(StringEnum):
    """Происхождение отображения когомологий."""

    RES = "res"
    COR = "cor"
    CONJ = "conj"
    THETA = "theta"
    PI = "pi"
    IDENTITY = "identity"
    COMPOSITE = "composite"
    SUM = "sum"
