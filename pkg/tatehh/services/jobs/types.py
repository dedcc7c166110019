from typing import TypeAlias

TemplateName: TypeAlias = str
RelationText: TypeAlias = str
