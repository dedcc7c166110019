from typing import NoReturn

from .types import Prime
from ..config import MAX_PRIME


def is_prime(number: int) -> bool:
    """Проверка простоты числа пробным делением.

    Args:
        number: Проверяемое число.

    Returns:
        True, если число простое.
    """
    if number < 2:
        return False
    if number % 2 == 0:
        return number == 2
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


def validate_prime(p: Prime) -> None | NoReturn:
    """Валидация характеристики поля.

    Args:
        p: Характеристика.

    Raises:
        InvalidPrimeException: Если p не простое или слишком велико для точной арифметики int64.
    """
    from .linalg.exceptions import InvalidPrimeException

    if not isinstance(p, int) or isinstance(p, bool) or p > MAX_PRIME or not is_prime(p):
        raise InvalidPrimeException(
            key="linalg.errors.invalid_prime",
            fallback=f"Characteristic must be a prime below 2^31, got {p!r}",
            translation_params={"p": str(p)},
        )
