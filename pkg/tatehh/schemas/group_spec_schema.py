from typing_extensions import Self

from pydantic import BaseModel, Field, model_validator


class GroupSpecSchema(BaseModel):
    """Схема описания конечной группы (таблица Кэли или порождающие перестановки)."""

    name: str = Field(..., min_length=1, description="Имя группы")
    order: int = Field(..., ge=1, description="Порядок группы")
    cayley_table: list[list[int]] | None = Field(None, description="Таблица умножения (список строк)")
    perm_generators: list[list[int]] | None = Field(
        None, description="Порождающие перестановки в однострочной записи образов"
    )

    @model_validator(mode="after")
    def check_exactly_one_source(self) -> Self:
        """Проверка, что задан ровно один источник группы.

        Returns:
            Провалидированная схема.

        Raises:
            ValueError: Если заданы оба источника или ни одного.
        """
        if (self.cayley_table is None) == (self.perm_generators is None):
            raise ValueError("exactly one of cayley_table or perm_generators must be given")
        return self
