from .actions import (
    GroupAction,
    OrbitProductDatum,
    action_from_function,
    conjugation_action,
    locate_product_datum,
    orbit_index,
    orbit_representatives,
    orbit_stabilizer,
    trivial_action,
)
from .cosets import (
    ConjugacyClass,
    RightTransversal,
    centralizer,
    conjugacy_data,
    coset_reps,
    double_coset,
    double_coset_reps,
    right_transversal,
)
from .finite_group import FiniteGroup, Subgroup, build_group, group_from_permutations, group_from_table
from .library import builtin_group, builtin_names, cyclic_group, resolve_group

__all__ = (
    "ConjugacyClass",
    "FiniteGroup",
    "GroupAction",
    "OrbitProductDatum",
    "RightTransversal",
    "Subgroup",
    "action_from_function",
    "build_group",
    "builtin_group",
    "builtin_names",
    "centralizer",
    "conjugacy_data",
    "conjugation_action",
    "coset_reps",
    "cyclic_group",
    "double_coset",
    "double_coset_reps",
    "group_from_permutations",
    "group_from_table",
    "locate_product_datum",
    "orbit_index",
    "orbit_representatives",
    "orbit_stabilizer",
    "resolve_group",
    "right_transversal",
    "trivial_action",
)
