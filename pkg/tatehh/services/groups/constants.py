BUILTIN_FIXED_NAMES: tuple[str, ...] = ("C2xC2", "S3", "D4", "Q8")

S3_GENERATORS: tuple[tuple[int, ...], ...] = ((1, 2, 0), (1, 0, 2))
S3_LABELS: tuple[str, ...] = ("1", "a", "b", "a^2", "ab", "ba")

D4_GENERATORS: tuple[tuple[int, ...], ...] = ((1, 2, 3, 0), (0, 3, 2, 1))

KLEIN_LABELS: tuple[str, ...] = ("1", "u", "v", "uv")

QUATERNION_UNITS: tuple[str, ...] = ("1", "i", "j", "k")
