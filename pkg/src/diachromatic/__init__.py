"""Digraph families from Zykov sums and lexicographic products of cycles,
their complete acyclic and harmonious colorings, and the exact brute-force
oracles that cross-check every claimed chromatic value at desk scale."""

from .digraph import (
    Arc,
    ArcTrail,
    BudgetExceeded,
    Digraph,
    complete_symmetric,
    directed_cycle,
    directed_path,
    eulerian_circuit,
    generate,
    induced_subdigraph,
    is_acyclic,
    max_acyclic_set_size,
    subdivide_arc,
    transitive_tournament,
)
from .coloring import (
    CheckReport,
    ClassPairMatrix,
    Coloring,
    ColorScheme,
    check,
    class_pair_matrix,
    complete_color_bound,
    complete_color_bound_floor,
    minimality_certificate,
)
from .transforms import (
    AmalgamationOutcome,
    DetachmentMap,
    Factorization,
    FactorizationReport,
    FamilyAssignment,
    UnfoldResult,
    amalgamate_to_complete,
    cyclic_sequencing,
    hamiltonian_cycle_factorization,
    hamiltonian_path_factorization,
    identify,
    lexicographic_power,
    tournament_split,
    unfold_complete_to_cycle,
    verify_factorization,
    zykov_sum,
)
from .constructions import (
    BoundsProfile,
    HarmoniousOutcome,
    MinimalInstance,
    RecurrenceTable,
    ceiling_ratio_table,
    cycle_power_minimal,
    dac_upper_profile,
    dc_cycle_power,
    dc_product_lower_bound,
    extended_dac_coloring,
    h_lower_profile,
    k2_k3_k4_over_c6,
    path_power_minimal,
    product_minimal,
    scaled_power_floor,
    scan_bounds,
    trimmed_harmonious_coloring,
)
from .oracles import OracleResult, coloring_search, exact_max, exact_min

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcTrail",
    "AmalgamationOutcome",
    "BoundsProfile",
    "BudgetExceeded",
    "CheckReport",
    "ClassPairMatrix",
    "Coloring",
    "ColorScheme",
    "DetachmentMap",
    "Digraph",
    "Factorization",
    "FactorizationReport",
    "FamilyAssignment",
    "HarmoniousOutcome",
    "MinimalInstance",
    "OracleResult",
    "RecurrenceTable",
    "UnfoldResult",
    "amalgamate_to_complete",
    "ceiling_ratio_table",
    "check",
    "class_pair_matrix",
    "coloring_search",
    "complete_color_bound",
    "complete_color_bound_floor",
    "complete_symmetric",
    "cycle_power_minimal",
    "cyclic_sequencing",
    "dac_upper_profile",
    "dc_cycle_power",
    "dc_product_lower_bound",
    "directed_cycle",
    "directed_path",
    "eulerian_circuit",
    "exact_max",
    "exact_min",
    "extended_dac_coloring",
    "generate",
    "h_lower_profile",
    "hamiltonian_cycle_factorization",
    "hamiltonian_path_factorization",
    "identify",
    "induced_subdigraph",
    "is_acyclic",
    "k2_k3_k4_over_c6",
    "lexicographic_power",
    "max_acyclic_set_size",
    "minimality_certificate",
    "path_power_minimal",
    "product_minimal",
    "scaled_power_floor",
    "scan_bounds",
    "subdivide_arc",
    "tournament_split",
    "transitive_tournament",
    "trimmed_harmonious_coloring",
    "unfold_complete_to_cycle",
    "verify_factorization",
    "zykov_sum",
]
