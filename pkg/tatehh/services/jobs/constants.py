from pathlib import Path

TEMPLATES_DIR = Path(__file__).resolve().parent / "templates"
REPORT_TEMPLATE = "report.txt.j2"

RELATION_COMMENT_PREFIX = "#"

# Сверка формулы произведения с прямым cup-произведением в степенях |m|, |n| ≤ ORACLE_DEGREE_BOUND
ORACLE_DEGREE_BOUND = 2

# Воспроизведение S3 над F_3
DEMO_GROUP = "S3"
DEMO_PRIME = 3
DEMO_WINDOW = 6
DEMO_DIMENSION_DEGREES = range(-4, 5)
DEMO_DIMENSIONS: tuple[int, ...] = (2, 1, 1, 2, 2, 1, 1, 2, 2)
DEMO_GENERATOR_DEGREES: tuple[int, ...] = (3, 4, -4, 0, 1, 2, -2)
DEMO_INVERTIBLE: tuple[str, ...] = ("z", "zinv")
