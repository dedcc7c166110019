from typing import TypeAlias

Permutation: TypeAlias = tuple[int, ...]
CayleyTable: TypeAlias = list[list[int]]
Members: TypeAlias = tuple[int, ...]
OrbitIndex: TypeAlias = int
