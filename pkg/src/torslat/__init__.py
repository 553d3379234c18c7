"""Lattices of torsion pairs over reflexive relations and type-A algebras.

The package has five layers:

- ``lattice``: finite posets and lattices as boolean matrices, with
  irreducibles, semidistributivity, cover labellings (gamma, mu), the
  kappa bijections, interval sublattices, isomorphism, and DOT export.
- ``galois``: torsion pairs of an arbitrary reflexive relation on a
  finite set of bricks, the derived epi/mono relations, factorizability,
  brick labels on covers, and the invariant suite tying them together.
- ``quiver``: type-A quiver presentations with monomial relations,
  interval modules, exact Hom computation over the rationals, bricks,
  and the hom relation feeding the galois layer.
- ``bridge``: algebra quotients by monomial ideals and the induced
  surjections of torsion lattices, with fiber and label checks.
- ``oracle``: independent brute-force enumerations, exhaustive sweeps
  over small relations, a lattice census, and realization search.

The ``torslat`` command line wraps all of it; see ``torslat --help``.
"""

from .lattice import (
    AntisymmetryViolation,
    CoverEdge,
    FiniteLattice,
    FinitePoset,
    InternalInconsistency,
    NotALattice,
    NotComparable,
    NotIrreducible,
    NotSemidistributive,
    are_isomorphic,
    check_kappa_bijection,
    check_mu_eq_kappa_gamma,
    covers,
    gamma_label,
    interval_sublattice,
    is_join_semidistributive,
    is_lattice_quotient,
    is_meet_semidistributive,
    is_semidistributive,
    j_star,
    join_irreducibles,
    join_semidistributivity_violation,
    kappa,
    kappa_dual,
    m_star,
    meet_irreducibles,
    meet_semidistributivity_violation,
    mu_label,
    poset_from_pairs,
    to_dot,
    try_lattice,
)
from .galois import (
    BrickRelation,
    LabelMissing,
    LabelNotUnique,
    TorsLattice,
    TorsionPair,
    all_cover_labels,
    all_torsion_pairs,
    cover_brick_label,
    derived_epi,
    derived_mono,
    factorizability_violation,
    four_class_diagram,
    gap_nonempty_check,
    interval_ji_check,
    interval_label_set,
    is_factorizable,
    ji_of_brick,
    mi_of_brick,
    perp_left,
    perp_right,
    relation_from_arrows,
    tf_dual_check,
    tors_closure,
    verify_tors_lattice,
)
from .quiver import (
    HomSpace,
    IntervalModule,
    QuiverPresentation,
    UnexpectedHomDim,
    UnsupportedAlgebra,
    annihilated_by,
    arrow_ends,
    bricks,
    exists_surjection,
    hom_dim,
    hom_relation,
    indecomposables,
    is_brick,
    is_valid_interval,
    path_vertices,
    quotients,
    submodules,
    summands,
    torsion_subobject,
)
from .bridge import (
    AlgebraTors,
    InvalidIdeal,
    QuotientMap,
    fiber_check,
    label_preservation_check,
    quotient_map,
    tors_of_algebra,
)
from .oracle import (
    BudgetExceeded,
    SearchBudget,
    brute_torsion_pairs,
    closure_axiom_check,
    lattice_census,
    realize_sd_lattice,
    same_tors,
    subset_is_torsion_closed,
    surjection_dichotomy_sweep,
    sweep_factorizable,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraTors",
    "AntisymmetryViolation",
    "BrickRelation",
    "BudgetExceeded",
    "CoverEdge",
    "FiniteLattice",
    "FinitePoset",
    "HomSpace",
    "InternalInconsistency",
    "IntervalModule",
    "InvalidIdeal",
    "LabelMissing",
    "LabelNotUnique",
    "NotALattice",
    "NotComparable",
    "NotIrreducible",
    "NotSemidistributive",
    "QuiverPresentation",
    "QuotientMap",
    "SearchBudget",
    "TorsLattice",
    "TorsionPair",
    "UnexpectedHomDim",
    "UnsupportedAlgebra",
    "all_cover_labels",
    "all_torsion_pairs",
    "annihilated_by",
    "are_isomorphic",
    "arrow_ends",
    "bricks",
    "brute_torsion_pairs",
    "check_kappa_bijection",
    "check_mu_eq_kappa_gamma",
    "closure_axiom_check",
    "cover_brick_label",
    "covers",
    "derived_epi",
    "derived_mono",
    "exists_surjection",
    "factorizability_violation",
    "fiber_check",
    "four_class_diagram",
    "gamma_label",
    "gap_nonempty_check",
    "hom_dim",
    "hom_relation",
    "indecomposables",
    "interval_ji_check",
    "interval_label_set",
    "interval_sublattice",
    "is_brick",
    "is_factorizable",
    "is_join_semidistributive",
    "is_lattice_quotient",
    "is_meet_semidistributive",
    "is_semidistributive",
    "is_valid_interval",
    "j_star",
    "ji_of_brick",
    "join_irreducibles",
    "join_semidistributivity_violation",
    "kappa",
    "kappa_dual",
    "label_preservation_check",
    "lattice_census",
    "m_star",
    "meet_irreducibles",
    "meet_semidistributivity_violation",
    "mi_of_brick",
    "mu_label",
    "path_vertices",
    "perp_left",
    "perp_right",
    "poset_from_pairs",
    "quotient_map",
    "quotients",
    "realize_sd_lattice",
    "relation_from_arrows",
    "same_tors",
    "submodules",
    "subset_is_torsion_closed",
    "summands",
    "surjection_dichotomy_sweep",
    "sweep_factorizable",
    "tf_dual_check",
    "to_dot",
    "tors_closure",
    "tors_of_algebra",
    "torsion_subobject",
    "try_lattice",
    "verify_tors_lattice",
]
