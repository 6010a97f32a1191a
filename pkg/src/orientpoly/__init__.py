"""Exact orientation-based graph polynomials.

Chromatic, modular and integral tension, and Tutte polynomials of
multigraphs, the per-orientation lattice-point polynomials they decompose
into, and executable checks of the reciprocity and counting identities
that connect them.
"""

from .errors import (
    ContractViolation,
    GraphParseError,
    GuardExceeded,
    InterpolationInconsistencyError,
    LooplessHypothesisError,
)
from .graph_core import (
    ForestData,
    MultiGraph,
    RankProfile,
    closure,
    is_bridge,
    is_cut,
    load_graph,
    minor,
    rank_profile,
    read_graph,
    spanning_forest,
    subset_rank,
)
from .polynomial import BivariatePolynomial, RationalPolynomial, interpolate
from .orientations import (
    Orientation,
    OrientationClassification,
    apply_P,
    apply_Q,
    classify,
    coupling,
    cut_equivalent,
    enumerate_orientations,
    equivalence_class,
    induced_orientation,
    is_acyclic,
    is_oriented_cut,
)
from .tensions import (
    BoxCountMode,
    TensionVector,
    count_box_tensions,
    count_integral_nowhere_zero,
    count_modular_nowhere_zero,
    is_tension,
    lift_modular_tension,
    modq_fiber,
    tension_from_forest,
    tension_group_size,
    zero_one_tensions,
)
from .counting_polynomials import (
    IdentityCheck,
    IdentityReport,
    OrientationPolynomials,
    chromatic_polynomial,
    closed_chromatic_polynomial,
    closed_modular_tension_polynomial,
    count_integral_colorings,
    count_proper_colorings,
    integral_tension_polynomial,
    modular_tension_polynomial,
    per_orientation_polynomials,
    tutte_polynomial,
    verify_identities,
)
from .arrangements import (
    Flat,
    IntersectionPoset,
    characteristic_polynomial,
    coloring_poset,
    count_complement,
    tension_poset,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "RationalPolynomial",
    "interpolate",
    "ContractViolation",
    "GraphParseError",
    "GuardExceeded",
    "InterpolationInconsistencyError",
    "LooplessHypothesisError",
    "ForestData",
    "MultiGraph",
    "RankProfile",
    "closure",
    "is_bridge",
    "is_cut",
    "load_graph",
    "minor",
    "rank_profile",
    "read_graph",
    "spanning_forest",
    "subset_rank",
    "Orientation",
    "OrientationClassification",
    "apply_P",
    "apply_Q",
    "classify",
    "coupling",
    "cut_equivalent",
    "enumerate_orientations",
    "equivalence_class",
    "induced_orientation",
    "is_acyclic",
    "is_oriented_cut",
    "BoxCountMode",
    "TensionVector",
    "count_box_tensions",
    "count_integral_nowhere_zero",
    "count_modular_nowhere_zero",
    "is_tension",
    "lift_modular_tension",
    "modq_fiber",
    "tension_from_forest",
    "tension_group_size",
    "zero_one_tensions",
    "IdentityCheck",
    "IdentityReport",
    "OrientationPolynomials",
    "chromatic_polynomial",
    "closed_chromatic_polynomial",
    "closed_modular_tension_polynomial",
    "count_integral_colorings",
    "count_proper_colorings",
    "integral_tension_polynomial",
    "modular_tension_polynomial",
    "per_orientation_polynomials",
    "tutte_polynomial",
    "verify_identities",
    "Flat",
    "IntersectionPoset",
    "characteristic_polynomial",
    "coloring_poset",
    "count_complement",
    "tension_poset",
]
