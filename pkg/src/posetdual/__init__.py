"""Finite-poset duality toolkit.

Builds the complete lattice of monotone 0/1-valued maps on a finite
poset, its prime ideal/filter structure, and the second dual, and checks
that the second dual reproduces the original poset.
"""

from .errors import (
    BaseMismatchError,
    CycleDetectedError,
    DuplicateElementError,
    LemmaViolationError,
    NoWitnessError,
    ParseError,
    PosetDualError,
    TooLargeError,
    UnknownElementError,
)
from .poset import (
    CoverRelation,
    FinitePoset,
    find_isomorphism,
    is_monotone,
    leq,
    poset_from_relations,
    random_poset,
    transitive_reduction,
)
from .dual import (
    DualLattice,
    IrreducibleReport,
    MonotoneMap,
    enumerate_dual,
    evaluate,
    greatest_below,
    inf_of,
    irreducibles,
    is_join_irreducible,
    is_meet_irreducible,
    lambda_of,
    least_above,
    pointwise_leq,
    sup_of,
    upsilon_of,
)
from .ideals import (
    PrimePairReport,
    SubsetOfLattice,
    is_filter,
    is_ideal,
    is_prime_filter,
    is_prime_ideal,
    prime_principal_pairs,
    principal_filter,
    principal_ideal,
)
from .seconddual import (
    BoundedHom,
    IsomorphismReport,
    enumerate_second_dual_bruteforce,
    evaluation_hom,
    hom_leq,
    is_bounded_complete_hom,
    point_of_hom,
    satisfies_hom_definition,
    verify_isomorphism,
)
from .textio import (
    PosetDocument,
    build_poset,
    canonical_text,
    document_from_poset,
    parse_poset,
)
from .dot import emit_dot, emit_lattice_dot, emit_poset_dot, support_label
from .report import build_verification_report, render
from .cli import run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
