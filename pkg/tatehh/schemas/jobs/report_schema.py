from pydantic import BaseModel, Field


class ReportMetaSchema(BaseModel):
    """Метаданные отчёта."""

    command: str = Field(..., description="Команда")
    group: str = Field(..., description="Имя группы")
    order: int = Field(..., ge=1, description="Порядок группы")
    prime: int = Field(..., description="Характеристика")
    window: int = Field(..., ge=1, description="Граница степеней W")
    backend: str = Field(..., description="Реализация резольвенты")
    seed: int = Field(..., ge=0, description="Зерно выборочных проверок")


class DimensionRowSchema(BaseModel):
    """Строка таблицы размерностей."""

    degree: int = Field(..., description="Степень n")
    total: int = Field(..., ge=0, description="dim ĤHⁿ или dim Ĥⁿ(G, k)")
    orbits: list[int] = Field(default_factory=list, description="Размерности Ĥⁿ централизаторов по классам")


class GeneratorSchema(BaseModel):
    name: str = Field(..., description="Имя образующей")
    degree: int = Field(..., description="Степень")
    origin: str = Field(..., description="Происхождение")
    coordinates: list[int] = Field(default_factory=list, description="Координаты класса")


class PresentationSchema(BaseModel):
    """Представление кольца в окне."""

    window: tuple[int, int] = Field(..., description="Окно вычислений")
    generators: list[GeneratorSchema] = Field(default_factory=list, description="Образующие")
    relations: list[str] = Field(default_factory=list, description="Соотношения")
    aliases: list[str] = Field(default_factory=list, description="Дополнительные именованные классы")
    complete: bool = Field(..., description="Мономы порождают все компоненты окна")
    note: str = Field(..., description="Оговорка о границах применимости")


class RelationVerdictSchema(BaseModel):
    relation: str = Field(..., description="Соотношение")
    degree: int = Field(..., description="Степень")
    passed: bool = Field(..., description="Выполнено")
    witness: list[int] = Field(default_factory=list, description="Координаты значения")


class NilpotencySchema(BaseModel):
    name: str = Field(..., description="Имя образующей")
    degree: int = Field(..., description="Степень")
    exponent: int | None = Field(None, description="Наименьшая нулевая степень или null")
    checked_up_to: int = Field(..., ge=0, description="Наибольшая проверенная степень")


class PropertyVerdictSchema(BaseModel):
    name: str = Field(..., description="Тождество")
    family: str = Field(..., description="Группа тождеств")
    passed: bool = Field(..., description="Выполнено")
    checked: int = Field(..., ge=0, description="Число проверенных случаев")
    total: int = Field(..., ge=0, description="Число всех случаев до выборки")
    detail: str = Field("", description="Первый нарушающий случай")


class CheckSchema(BaseModel):
    """Результат отдельной сверки (формула и оракул, размерности, степени образующих)."""

    name: str = Field(..., description="Сверка")
    passed: bool = Field(..., description="Выполнена")
    detail: str = Field("", description="Подробности")


class ReportSchema(BaseModel):
    """Отчёт одного запуска CLI."""

    meta: ReportMetaSchema = Field(..., description="Метаданные")
    passed: bool = Field(True, description="Все проверки отчёта выполнены")
    dimensions: list[DimensionRowSchema] = Field(default_factory=list, description="Размерности по степеням")
    presentation: PresentationSchema | None = Field(None, description="Представление кольца")
    relations: list[RelationVerdictSchema] = Field(default_factory=list, description="Проверка соотношений")
    nilpotency: list[NilpotencySchema] = Field(default_factory=list, description="Нильпотентность образующих")
    properties: list[PropertyVerdictSchema] = Field(default_factory=list, description="Тождества")
    checks: list[CheckSchema] = Field(default_factory=list, description="Прочие сверки")

    class Config:
        json_schema_extra = {
            "example": {
                "meta": {
                    "command": "dims",
                    "group": "S3",
                    "order": 6,
                    "prime": 3,
                    "window": 1,
                    "backend": "reduced",
                    "seed": 0,
                },
                "passed": True,
                "dimensions": [
                    {"degree": -1, "total": 1, "orbits": [1, 0, 0]},
                    {"degree": 0, "total": 2, "orbits": [1, 1, 0]},
                    {"degree": 1, "total": 1, "orbits": [0, 1, 0]},
                ],
            }
        }
