from ...core.common import StringEnum


class DiagonalMethod(StringEnum):
    """Способ построения компоненты диагонального приближения."""

    ALEXANDER_WHITNEY = "alexander-whitney"
    PERIODIC = "periodic"
    LIFTED = "lifted"
