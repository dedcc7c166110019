from typing import TypeAlias

import numpy as np

Residues: TypeAlias = np.ndarray
PivotColumns: TypeAlias = tuple[int, ...]
