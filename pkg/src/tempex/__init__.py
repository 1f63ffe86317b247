"""Exact and FPT solvers for temporal-graph exploration problems.

Two walk models over one vertex set: strict walks traverse at most one edge
per timestep at strictly increasing times; non-strict walks occupy one
connected component per timestep with unlimited movement inside it.
"""

from .errors import (
    BudgetExceededError,
    CapacityError,
    InputError,
    TempexError,
    UnreachableError,
)
from .graphs import (
    INFINITY,
    NonStrictTemporalGraph,
    NonStrictWalk,
    StrictTemporalGraph,
    StrictWalk,
    TargetSpec,
    validate_ns_walk,
    validate_strict_walk,
    visited_vertices,
)
from .reachability import (
    NonStrictMetrics,
    ReachLabels,
    StrictMetrics,
    WalkMetricProvider,
    ns_earliest_arrival,
    reconstruct_walk,
    strict_earliest_arrival,
)
from .tour_dp import DpTableFixed, TourResult, build_fixed_table, solve_k_fixed, solve_texp
from .colour_coding import (
    Colouring,
    DpTableColourful,
    HashFamily,
    McConfig,
    build_colourful_table,
    build_verified_family,
    certify_family,
    colourful_dp,
    solve_k_arbitrary_det,
    solve_k_arbitrary_mc,
    verify_k_perfect,
)
from .two_component import TransitionClass, classify_transition, solve_gamma2
from .search_tree import (
    ComponentSelection,
    comp_reachable,
    solve_ns_k_fixed_search,
    solve_ns_texp,
    w_feasible,
)
from .reductions import (
    HittingSetInstance,
    SetCoverInstance,
    hitting_set_to_set_texp,
    set_cover_to_set_ns_texp,
    solve_hitting_set_bf,
    solve_set_cover_bf,
)
from .oracles import (
    NS_DEFAULT_BUDGET,
    STRICT_DEFAULT_BUDGET,
    OracleBudget,
    bf_ns,
    bf_set_ns_texp,
    bf_set_texp,
    bf_strict,
)
from .generators import random_ns_graph, random_strict_graph

__version__ = "0.1.0"
