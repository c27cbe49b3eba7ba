"""Decide which abelian groups of order n a circulant digraph Cay(Z_n, S) realizes.

The analyzer reads the answer off coset conditions on the connection set; the
oracle cross-checks it by brute-force search for regular abelian subgroups of
the automorphism group at desk scale.
"""

from .abelian import (
    AbelianType,
    PPartition,
    enumerate_abelian,
    hasse_edges,
    is_subdivision,
    preceq,
    preceq_p,
    up_set,
)
from .analyzer import (
    ConnectionSet,
    LayerDecomposition,
    PrimeLayers,
    analysis_report,
    coset_condition,
    decompose,
    minimal_group,
    parse_connection_set,
    product_type_witness,
    realizable_groups,
    subgroup_of_order,
    translation_check,
)
from .arith import Factorization, arithmetic_condition, big_omega, euler_phi, factorize
from .digraph import (
    Digraph,
    are_isomorphic,
    cayley_digraph,
    complete_digraph,
    directed_cycle,
    empty_digraph,
    tower_connection_set,
    tower_digraph,
    wreath,
)
from .errors import CapacityError
from .oracle import ValidationReport, cross_validate, regular_abelian_types
from .permgroup import (
    ArcColoring,
    BlockSystem,
    PermGroup,
    Permutation,
    automorphism_group,
    direct_product,
    is_nilpotent,
    orbital_coloring,
    rotation,
    two_closure,
    wreath_product,
)

__all__ = [
    "AbelianType",
    "ArcColoring",
    "BlockSystem",
    "CapacityError",
    "ConnectionSet",
    "Digraph",
    "Factorization",
    "LayerDecomposition",
    "PPartition",
    "PermGroup",
    "Permutation",
    "PrimeLayers",
    "ValidationReport",
    "analysis_report",
    "are_isomorphic",
    "arithmetic_condition",
    "automorphism_group",
    "big_omega",
    "cayley_digraph",
    "complete_digraph",
    "coset_condition",
    "cross_validate",
    "decompose",
    "direct_product",
    "directed_cycle",
    "empty_digraph",
    "enumerate_abelian",
    "euler_phi",
    "factorize",
    "hasse_edges",
    "is_nilpotent",
    "is_subdivision",
    "minimal_group",
    "orbital_coloring",
    "parse_connection_set",
    "preceq",
    "preceq_p",
    "product_type_witness",
    "realizable_groups",
    "regular_abelian_types",
    "rotation",
    "subgroup_of_order",
    "tower_connection_set",
    "tower_digraph",
    "translation_check",
    "two_closure",
    "up_set",
    "wreath",
    "wreath_product",
]
