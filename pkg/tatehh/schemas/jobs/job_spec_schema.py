from pathlib import Path
from typing import Literal

from typing_extensions import Self

from pydantic import BaseModel, Field, field_validator, model_validator

from ...config import DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_WINDOW, MAX_PRIME
from ...core.common import StringEnum
from ...services.validators import is_prime


class JobCommand(StringEnum):
    """Команды CLI."""

    DIMS = "dims"
    TATE = "tate"
    RING = "ring"
    VERIFY = "verify"
    ORACLE_CHECK = "oracle-check"
    PROPS = "props"
    DEMO_S3 = "demo-s3"


class OutputFormat(StringEnum):
    TEXT = "text"
    STRUCTURED = "structured"


class JobSpecSchema(BaseModel):
    """Схема задания CLI."""

    command: JobCommand = Field(..., description="Команда")
    group: str = Field("S3", min_length=1, description="Имя встроенной группы или путь к JSON-описанию")
    prime: int = Field(DEFAULT_PRIME, le=MAX_PRIME, description="Характеристика p")
    window: int = Field(DEFAULT_WINDOW, ge=1, description="Граница степеней W, отчёт по n ∈ [-W, W]")
    output_format: OutputFormat = Field(OutputFormat.TEXT, description="Формат отчёта")
    backend: Literal["auto", "generic", "reduced", "cyclic"] = Field("auto", description="Реализация резольвенты")
    relations: Path | None = Field(None, description="Файл соотношений для verify")
    seed: int = Field(DEFAULT_SEED, ge=0, description="Зерно выборочных проверок")
    naming: Literal["generic", "named"] = Field("generic", description="Именование образующих")

    @field_validator("prime")
    @classmethod
    def check_prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"{value} is not a prime")
        return value

    @model_validator(mode="after")
    def check_relations_file(self) -> Self:
        """Проверка, что verify получает файл соотношений.

        Returns:
            Провалидированная схема.

        Raises:
            ValueError: Если для verify не задан файл.
        """
        if self.command == JobCommand.VERIFY and self.relations is None:
            raise ValueError("verify needs a relations file")
        return self
