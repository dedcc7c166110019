NAMED_PRIME = 3
NAMED_GROUP_ORDER = 6
NAMED_STABILIZER_ORDERS: tuple[int, ...] = (6, 3, 2)
NAMED_TOP_DEGREE = 4

S3_RELATIONS: tuple[str, ...] = (
    "x*W1 = 0",
    "x*W2 = z*W1",
    "z^-1*W1 = x*z^-1*W2^-1",
    "C^2 = 0",
    "C*W1 = 0",
    "C*W2 = 0",
    "C*W2^-1 = 0",
    "W2^2 = z*C",
    "W2^-2 = z^-1*C",
    "W1*W2 = x*C",
    "W1*W2^-1 = x*z^-1*C",
)
S3_IDEMPOTENT_RELATION = "E2^2 = E2 - 1"
S3_NILPOTENT_EXPONENTS: dict[str, int] = {"C": 2, "W1": 2, "W2": 3, "W2inv": 3}
