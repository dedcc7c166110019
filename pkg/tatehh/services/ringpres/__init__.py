from .constants import S3_IDEMPOTENT_RELATION, S3_NILPOTENT_EXPONENTS, S3_RELATIONS
from .engine import GradedRing, RingEngine
from .extraction import extract, generic_generators, layer_generators
from .named import named_generators
from .radical import radical_report
from .relations import parse_relation, render_relation, render_word, verify_relations
from .types import (
    Generator,
    Naming,
    NilpotencyVerdict,
    ProductMethod,
    Relation,
    RelationVerdict,
    RingPresentation,
    Term,
    Word,
)

__all__ = (
    "Generator",
    "GradedRing",
    "Naming",
    "NilpotencyVerdict",
    "ProductMethod",
    "Relation",
    "RelationVerdict",
    "RingEngine",
    "RingPresentation",
    "S3_IDEMPOTENT_RELATION",
    "S3_NILPOTENT_EXPONENTS",
    "S3_RELATIONS",
    "Term",
    "Word",
    "extract",
    "generic_generators",
    "layer_generators",
    "named_generators",
    "parse_relation",
    "radical_report",
    "render_relation",
    "render_word",
    "verify_relations",
)
