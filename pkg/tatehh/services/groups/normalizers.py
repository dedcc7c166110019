import re


class GroupsServiceNormalizers:
    """Класс с нормализаторами для groups-сервиса."""

    @staticmethod
    def normalize_group_name(name: str) -> str:
        """Метод нормализации имени встроенной группы.

        Важно: убирает пробелы и приводит разделитель прямого произведения к "x",
        регистр букв сохраняется ("C2xC2", "S3").

        Args:
            name: Имя группы.

        Returns:
            Нормализованное имя.
        """
        compact = re.sub(r"\s+", "", name or "")
        return re.sub(r"[×*X]", "x", compact)

    @staticmethod
    def normalize_permutation(permutation: list[int]) -> tuple[int, ...]:
        return tuple(int(i) for i in permutation)
