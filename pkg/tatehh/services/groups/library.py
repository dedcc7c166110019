import logging
import re
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from .constants import (
    BUILTIN_FIXED_NAMES,
    D4_GENERATORS,
    KLEIN_LABELS,
    QUATERNION_UNITS,
    S3_GENERATORS,
    S3_LABELS,
)
from .exceptions import InvalidGroupSpecException, UnknownGroupException
from .finite_group import FiniteGroup, build_group, group_from_permutations
from .normalizers import GroupsServiceNormalizers
from ...config import MAX_BUILTIN_CYCLIC_ORDER
from ...core.common import read_text_file
from ...schemas import GroupSpecSchema

logger = logging.getLogger(__name__)

_CYCLIC_NAME = re.compile(r"^C(\d+)$")

# Таблица умножения единиц кватернионов: (знак, единица)
_UNIT_PRODUCTS: dict[tuple[int, int], tuple[int, int]] = {
    (1, 1): (1, 0),
    (1, 2): (0, 3),
    (1, 3): (1, 2),
    (2, 1): (1, 3),
    (2, 2): (1, 0),
    (2, 3): (0, 1),
    (3, 1): (0, 2),
    (3, 2): (1, 1),
    (3, 3): (1, 0),
}


def cyclic_group(n: int) -> FiniteGroup:
    """Циклическая группа C_n с порождающим a = 1."""
    index = np.arange(n, dtype=np.int64)
    labels = tuple("1" if i == 0 else ("a" if i == 1 else f"a^{i}") for i in range(n))
    return FiniteGroup(name=f"C{n}", table=(index[:, None] + index[None, :]) % n, labels=labels)


def klein_four_group() -> FiniteGroup:
    index = np.arange(4, dtype=np.int64)
    return FiniteGroup(name="C2xC2", table=index[:, None] ^ index[None, :], labels=KLEIN_LABELS)


def symmetric_group_s3() -> FiniteGroup:
    """S₃ в нумерации [1, a, b, a², ab, ba], a = (0 1 2), b = (0 1)."""
    return group_from_permutations("S3", S3_GENERATORS, S3_LABELS)


def dihedral_group_d4() -> FiniteGroup:
    return group_from_permutations("D4", D4_GENERATORS, ("1", "r", "s", "r^2", "rs", "sr", "r^3", "r^2s"))


def quaternion_group() -> FiniteGroup:
    """Группа кватернионов Q₈, элемент с индексом 2u + s есть (-1)^s·u."""

    def multiply(a: int, b: int) -> int:
        unit_a, sign_a = divmod(a, 2)
        unit_b, sign_b = divmod(b, 2)
        if unit_a == 0 or unit_b == 0:
            sign, unit = 0, unit_a + unit_b
        else:
            sign, unit = _UNIT_PRODUCTS[(unit_a, unit_b)]
        return 2 * unit + (sign + sign_a + sign_b) % 2

    table = np.array([[multiply(a, b) for b in range(8)] for a in range(8)], dtype=np.int64)
    labels = tuple(("-" if s else "") + QUATERNION_UNITS[u] for u in range(4) for s in range(2))
    return FiniteGroup(name="Q8", table=table, labels=labels)


_FIXED_BUILDERS = {
    "C2xC2": klein_four_group,
    "S3": symmetric_group_s3,
    "D4": dihedral_group_d4,
    "Q8": quaternion_group,
}


def builtin_names() -> list[str]:
    return [f"C{n}" for n in range(1, MAX_BUILTIN_CYCLIC_ORDER + 1)] + list(BUILTIN_FIXED_NAMES)


def builtin_group(name: str) -> FiniteGroup | None:
    """Функция построения встроенной группы по имени.

    Args:
        name: Имя группы (C1..C12, C2xC2, S3, D4, Q8).

    Returns:
        Группа или None, если имя не встроенное.
    """
    name = GroupsServiceNormalizers.normalize_group_name(name)
    if name in _FIXED_BUILDERS:
        return _FIXED_BUILDERS[name]()
    match = _CYCLIC_NAME.match(name)
    if match and 1 <= int(match.group(1)) <= MAX_BUILTIN_CYCLIC_ORDER:
        return cyclic_group(int(match.group(1)))
    return None


def load_group_spec(path: Path) -> GroupSpecSchema:
    """Функция чтения описания группы из JSON-файла.

    Args:
        path: Путь к файлу.

    Returns:
        Провалидированное описание.

    Raises:
        InvalidGroupSpecException: Если документ не соответствует схеме.
    """
    try:
        return GroupSpecSchema.model_validate_json(read_text_file(path))
    except ValidationError as e:
        raise InvalidGroupSpecException(
            key="groups.errors.invalid_group_spec",
            fallback=f"Group spec {path} is invalid: {e.error_count()} validation error(s)",
            details={"errors": e.errors(include_url=False, include_context=False)},
        ) from e


def resolve_group(name_or_path: str) -> FiniteGroup:
    """Функция получения группы по имени встроенной группы или пути к файлу описания.

    Args:
        name_or_path: Имя встроенной группы или путь к JSON-документу.

    Returns:
        Каноническая группа.

    Raises:
        UnknownGroupException: Если группа не найдена.
    """
    group = builtin_group(name_or_path)
    if group is not None:
        return group
    path = Path(name_or_path)
    if path.is_file():
        logger.info(f"Loading group spec from {path}")
        return build_group(load_group_spec(path))
    raise UnknownGroupException(
        key="groups.errors.unknown_group",
        fallback=f"Unknown group {name_or_path!r}; built-ins are {', '.join(builtin_names())}",
        translation_params={"name": name_or_path},
    )
