import os

# Localization
DEFAULT_LOCALE = "en"
SUPPORTED_LOCALES: tuple[str, ...] = ("en", "ru")
LOCALE: str = os.getenv("TATEHH_LOCALE", DEFAULT_LOCALE)

# Logging
LOG_LEVEL: str = os.getenv("TATEHH_LOG_LEVEL", "WARNING")

# Limits
SIZE_BUDGET: int = int(os.getenv("TATEHH_SIZE_BUDGET", "20000"))
MAX_GROUP_ORDER: int = int(os.getenv("TATEHH_MAX_GROUP_ORDER", "64"))
GENERATOR_CLOSURE_BOUND: int = int(os.getenv("TATEHH_GENERATOR_CLOSURE_BOUND", "512"))
MAX_PRIME: int = 2**31 - 1
ASSOCIATIVITY_CHECK_LIMIT: int = 64
HOMOMORPHISM_CHECK_LIMIT: int = 16
SAMPLED_CHECKS: int = int(os.getenv("TATEHH_SAMPLED_CHECKS", "200"))

# Ring extraction
MONOMIAL_LENGTH_BOUND: int = int(os.getenv("TATEHH_MONOMIAL_LENGTH_BOUND", "3"))
NILPOTENCY_EXPONENT_BOUND: int = int(os.getenv("TATEHH_NILPOTENCY_EXPONENT_BOUND", "6"))

# CLI defaults
DEFAULT_PRIME: int = 3
DEFAULT_WINDOW: int = 4
DEFAULT_SEED: int = 0
MAX_BUILTIN_CYCLIC_ORDER: int = 12
