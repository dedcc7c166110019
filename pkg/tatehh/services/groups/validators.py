from typing import NoReturn

import numpy as np

from .exceptions import InvalidGroupSpecException, NotAssociativeException, NotLatinSquareException
from ...config import ASSOCIATIVITY_CHECK_LIMIT, SAMPLED_CHECKS


class GroupValidators:
    """Валидаторы для groups-сервиса."""

    @classmethod
    def validate_square(cls, table: np.ndarray) -> None | NoReturn:
        """Метод проверки формы таблицы.

        Args:
            table: Таблица умножения.

        Raises:
            InvalidGroupSpecException: Таблица не квадратная или содержит индексы вне диапазона.
        """
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroupSpecException(
                key="groups.errors.invalid_group_spec",
                fallback=f"Cayley table must be a non-empty square, got shape {table.shape}",
            )
        if table.min() < 0 or table.max() >= table.shape[0]:
            raise InvalidGroupSpecException(
                key="groups.errors.invalid_group_spec",
                fallback="Cayley table entries must be element indices",
            )

    @classmethod
    def validate_latin_square(cls, table: np.ndarray) -> None | NoReturn:
        """Метод проверки свойства латинского квадрата.

        Args:
            table: Таблица умножения.

        Raises:
            NotLatinSquareException: Строка или столбец содержит повтор.
        """
        n = table.shape[0]
        expected = np.arange(n)
        rows_ok = (np.sort(table, axis=1) == expected).all()
        cols_ok = (np.sort(table, axis=0) == expected[:, None]).all()
        if not (rows_ok and cols_ok):
            raise NotLatinSquareException(
                key="groups.errors.not_latin_square",
                fallback="Cayley table is not a Latin square",
            )

    @classmethod
    def validate_associativity(cls, table: np.ndarray) -> None | NoReturn:
        """Метод проверки ассоциативности: полный перебор до ASSOCIATIVITY_CHECK_LIMIT, выборка выше.

        Args:
            table: Таблица умножения.

        Raises:
            NotAssociativeException: Найдена тройка с (ab)c ≠ a(bc).
        """
        n = table.shape[0]
        if n <= ASSOCIATIVITY_CHECK_LIMIT:
            left = table[table]
            right = table[np.arange(n)[:, None, None], table[None, :, :]]
            associative = bool(np.array_equal(left, right))
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, SAMPLED_CHECKS))
            associative = bool(np.array_equal(table[table[a, b], c], table[a, table[b, c]]))
        if not associative:
            raise NotAssociativeException(
                key="groups.errors.not_associative",
                fallback="Cayley table is not associative",
            )

    @classmethod
    def validate_table(cls, table: np.ndarray) -> None | NoReturn:
        """Метод полной валидации канонической таблицы (единица в индексе 0).

        Args:
            table: Таблица умножения.
        """
        cls.validate_square(table)
        n = table.shape[0]
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise InvalidGroupSpecException(
                key="groups.errors.identity_not_first",
                fallback="Element 0 must be the identity of the canonical table",
            )
        cls.validate_latin_square(table)
        cls.validate_associativity(table)
