"""Brauer trees, their mutation, and tilting mutation of Brauer tree algebras.

The ribbon layer is purely combinatorial; the algebra and homotopy layers
realize the same data through exact linear algebra over the rationals; the
verify layer plays the routes against each other and reports evidence.
"""

from .ribbon import (
    BrauerTree,
    InvalidTree,
    LabelPermutation,
    canonical_code,
    cartan_formula,
    ext_formula,
    follows,
    is_star,
    isomorphic,
    mutate,
    path_tree,
    reconstruct,
    relabel,
    star_tree,
    successor,
    to_star_sequence,
    validate,
    with_multiplicity,
)
from .enumeration import TreeFamily, all_trees, mutation_graph, orbit_order
from .algebra import StructureAlgebra, build_algebra, cartan_count, multiply, quiver, radical
from .homotopy import (
    TwoTermComplex,
    cartan_mutation_formula,
    chain_map_space,
    endomorphism_algebra,
    hom_class_dim,
    homotopy_trivial_space,
    or_complex,
    tilting_report,
)
from .verify import (
    VerificationReport,
    verify_braid,
    verify_cartan,
    verify_counts,
    verify_main,
    verify_to_star,
)

__all__ = [
    "BrauerTree",
    "InvalidTree",
    "LabelPermutation",
    "StructureAlgebra",
    "TreeFamily",
    "TwoTermComplex",
    "VerificationReport",
    "all_trees",
    "build_algebra",
    "canonical_code",
    "cartan_count",
    "cartan_formula",
    "cartan_mutation_formula",
    "chain_map_space",
    "endomorphism_algebra",
    "ext_formula",
    "follows",
    "hom_class_dim",
    "homotopy_trivial_space",
    "is_star",
    "isomorphic",
    "multiply",
    "mutate",
    "mutation_graph",
    "or_complex",
    "orbit_order",
    "path_tree",
    "quiver",
    "radical",
    "reconstruct",
    "relabel",
    "star_tree",
    "successor",
    "tilting_report",
    "to_star_sequence",
    "validate",
    "verify_braid",
    "verify_cartan",
    "verify_counts",
    "verify_main",
    "verify_to_star",
    "with_multiplicity",
]

__version__ = "0.1.0"
