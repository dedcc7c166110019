from typing import TypeAlias

import numpy as np

from ...core.common import StringEnum


class Backend(StringEnum):
    """Реализация полной резольвенты."""

    AUTO = "auto"
    GENERIC = "generic"
    REDUCED = "reduced"
    CYCLIC = "cyclic"


# Строки (s, t, g, c): d(b_s) содержит слагаемое c·g·b_t
FreeMapTerms: TypeAlias = np.ndarray
# Значения F(b_s) эквивариантного отображения в X ⊗ Ω, форма (ранг, dim X, dim Ω)
LiftValues: TypeAlias = np.ndarray
