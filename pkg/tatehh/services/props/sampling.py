from collections.abc import Sequence
from typing import TypeVar

import numpy as np

T = TypeVar("T")


def sample_cases(cases: Sequence[T], rng: np.random.Generator, budget: int | None) -> Sequence[T]:
    """Не более budget случаев без повторов, в исходном порядке; при малом числе случаев или budget None все."""
    if budget is None or len(cases) <= budget:
        return cases
    chosen = rng.choice(len(cases), size=budget, replace=False)
    return [cases[i] for i in sorted(chosen)]
