from enum import Enum
from pathlib import Path


class StringEnum(str, Enum):
    """Перечисление со строковыми значениями; str() и f-строки дают значение, а не имя члена."""

    def __str__(self) -> str:
        return self.value

    @classmethod
    def values(cls) -> list[str]:
        """Значения членов в порядке объявления (для choices в argparse и сообщений об ошибках)."""
        return [member.value for member in cls]


def read_text_file(path: str | Path, encoding: str = "utf-8") -> str:
    """Чтение текстового файла целиком.

    Raises:
        OSError: Файл не открывается.
        UnicodeDecodeError: Содержимое не в кодировке encoding.
    """
    return Path(path).read_text(encoding=encoding)


def sign(exponent: int) -> int:
    """Знак (-1)^exponent."""
    return -1 if exponent % 2 else 1
