from typing import NoReturn

from .exceptions import InvalidWindowException, ResolutionTooLargeException
from ..types import Window
from ...config import SIZE_BUDGET


class ResolutionsValidators:
    """Валидаторы для resolutions-сервиса."""

    @staticmethod
    def validate_window(window: Window) -> None | NoReturn:
        """Метод проверки окна степеней.

        Args:
            window: Окно [lo, hi].

        Raises:
            InvalidWindowException: Окно не содержит [-1, 1].
        """
        lo, hi = window
        if lo > -1 or hi < 1:
            raise InvalidWindowException(
                key="resolutions.errors.invalid_window",
                fallback=f"Window [{lo}, {hi}] must contain [-1, 1]",
                translation_params={"lo": lo, "hi": hi},
            )

    @staticmethod
    def validate_size(dimension: int, what: str, budget: int = SIZE_BUDGET) -> None | NoReturn:
        """Метод проверки бюджета размера.

        Args:
            dimension: Размерность над k.
            what: Описание объекта для сообщения.
            budget: Допустимая размерность.

        Raises:
            ResolutionTooLargeException: Размерность превышает бюджет.
        """
        if dimension > budget:
            raise ResolutionTooLargeException(
                key="resolutions.errors.size_budget_exceeded",
                fallback=f"{what} has dimension {dimension} over the size budget {budget}",
                translation_params={"what": what, "dimension": dimension, "budget": budget},
                details={"dimension": dimension, "budget": budget},
            )
