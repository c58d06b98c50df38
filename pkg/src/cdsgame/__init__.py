"""Context-directed swap sorting games.

Permutation rewriting by context-directed swaps, strategic-pile analysis,
overlap graphs and their gcds pivots, exact solvers for the two associated
combinatorial games, generator families sitting on the winning bounds, and
machine-checkable verification suites.
"""

from .cyclegraph import (
    AltCycleDecomposition,
    CycleGraph,
    SizeBoundError,
    StrategicPile,
    achievable_fixed_points,
    alternating_cycles,
    build_cycle_graph,
    is_sortable,
    sortable_bruteforce,
    strategic_pile,
)
from .families import (
    BoundPrediction,
    ConstructionError,
    bound_prediction,
    expected_np,
    gen_alpha,
    gen_chain,
    gen_favorable,
    tight_instance,
)
from .games import (
    ONE,
    TWO,
    CacheFormatError,
    CdsState,
    GcdsState,
    NpReport,
    SolveCache,
    SolveReport,
    cache_load,
    cache_save,
    cds_terminal_winner,
    gcds_terminal_winner,
    np_status,
    opponent,
    solve_cds,
    solve_gcds,
)
from .graphs import (
    Graph,
    MasterList,
    NotAnEdgeError,
    Position,
    VertexClasses,
    apply_gcds,
    apply_gcds2,
    apply_gcds_via_classes,
    are_isomorphic,
    masterlist,
    positions_isomorphic,
    vertex_classes,
)
from .overlap import check_commutation, overlap_graph
from .suites import SUITE_NAMES, SuiteResult, run_all, run_suite
from .permutations import (
    NotApplicableError,
    Occurrence,
    ParseError,
    Permutation,
    apply_cds,
    fixed_point_code,
    identity,
    interlocks,
    is_fixed_point,
    legal_moves,
    parse_permutation,
    pointer_occurrences,
)

__version__ = "0.1.0"

__all__ = [
    "AltCycleDecomposition",
    "BoundPrediction",
    "CacheFormatError",
    "CdsState",
    "ConstructionError",
    "CycleGraph",
    "GcdsState",
    "Graph",
    "MasterList",
    "NotAnEdgeError",
    "NotApplicableError",
    "NpReport",
    "ONE",
    "Occurrence",
    "ParseError",
    "Permutation",
    "Position",
    "SizeBoundError",
    "SUITE_NAMES",
    "SolveCache",
    "SolveReport",
    "StrategicPile",
    "SuiteResult",
    "TWO",
    "VertexClasses",
    "achievable_fixed_points",
    "alternating_cycles",
    "apply_cds",
    "apply_gcds",
    "apply_gcds2",
    "apply_gcds_via_classes",
    "are_isomorphic",
    "bound_prediction",
    "build_cycle_graph",
    "cache_load",
    "cache_save",
    "cds_terminal_winner",
    "check_commutation",
    "expected_np",
    "fixed_point_code",
    "gcds_terminal_winner",
    "gen_alpha",
    "gen_chain",
    "gen_favorable",
    "identity",
    "interlocks",
    "is_fixed_point",
    "is_sortable",
    "legal_moves",
    "masterlist",
    "np_status",
    "opponent",
    "overlap_graph",
    "parse_permutation",
    "pointer_occurrences",
    "positions_isomorphic",
    "run_all",
    "run_suite",
    "solve_cds",
    "solve_gcds",
    "sortable_bruteforce",
    "strategic_pile",
    "tight_instance",
    "vertex_classes",
]
