from typing import TypeAlias

import numpy as np

Prime: TypeAlias = int
Degree: TypeAlias = int
Window: TypeAlias = tuple[int, int]
ElementIndex: TypeAlias = int
Vector: TypeAlias = np.ndarray
Array: TypeAlias = np.ndarray
