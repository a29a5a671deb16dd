"""ublab: distance-unbalancedness invariants of graphs, exhaustive tree
verification, and exact solvers for the associated leg-length programs.

The package computes the Mostar index ``mo``, the total unbalancedness
``ub``, and the short-range unbalancedness ``ub2`` of connected graphs;
enumerates free trees by canonical level sequence; verifies per-order
minimality statements for ``ub``/``ub2`` over all trees; and checks the
closed forms of the named families and optimization programs, all in exact
integer/rational arithmetic.
"""

from ublab.backend import USING_NUMBA, backend_name, warmup
from ublab.errors import (
    DisconnectedGraphError,
    GraphInputError,
    InfeasibleError,
    InvalidOrderError,
    InvalidSpecError,
    MalformedSequenceError,
    NoSplitError,
    NotATreeError,
    UblabError,
)
from ublab.extremal import (
    CaseTwoRecord,
    ExtremalReport,
    case2_decrease_records,
    reports_to_csv,
    reports_to_json,
    verify_case2_decrease,
    verify_distance3_equality_argument,
    verify_order,
    verify_range,
)
from ublab.families import (
    CaseTwoSplit,
    SpiderSpec,
    case2_split,
    case2_transform,
    make_double_star,
    make_path,
    make_spider,
    make_star,
    ub2_double_star_closed_form,
    ub2_path_closed_form,
    ub2_spider_closed_form,
    ub_star_closed_form,
)
from ublab.graphs import (
    Graph,
    InvariantRecord,
    all_pairs_distances,
    closer_counts,
    compute_invariants,
    distance_unbalancedness,
    invariant_sums,
    is_distance_balanced,
    is_highly_distance_balanced,
    mostar_index,
    parse_edgelist,
    square_pairs,
    square_unbalancedness,
)
from ublab.relaxation import (
    RelaxationInstance,
    RelaxationSolution,
    case2_bound,
    case2_objective,
    case2_value_identity,
    case12_objective,
    case12_value_identity,
    claimed_case2,
    claimed_case12,
    claimed_e1,
    e1_value_identity,
    iter_sweep_solutions,
    objective_e1,
    solve_case2,
    solve_case12,
    solve_e1,
    sweep_claims,
)
from ublab.treegen import (
    canonical_form,
    canonical_text,
    count_free_trees,
    enumerate_free_trees,
    format_level_sequence,
    level_sequence_to_graph,
    parents_from_level_sequence,
    parse_level_sequence,
    prufer_census,
    prufer_decode,
    tree_centers,
    validate_level_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "USING_NUMBA",
    "backend_name",
    "warmup",
    "UblabError",
    "GraphInputError",
    "MalformedSequenceError",
    "InvalidOrderError",
    "InvalidSpecError",
    "InfeasibleError",
    "DisconnectedGraphError",
    "NotATreeError",
    "NoSplitError",
    "Graph",
    "InvariantRecord",
    "parse_edgelist",
    "all_pairs_distances",
    "closer_counts",
    "mostar_index",
    "distance_unbalancedness",
    "square_unbalancedness",
    "square_pairs",
    "invariant_sums",
    "is_distance_balanced",
    "is_highly_distance_balanced",
    "compute_invariants",
    "validate_level_sequence",
    "parse_level_sequence",
    "format_level_sequence",
    "parents_from_level_sequence",
    "level_sequence_to_graph",
    "canonical_form",
    "canonical_text",
    "tree_centers",
    "enumerate_free_trees",
    "count_free_trees",
    "prufer_decode",
    "prufer_census",
    "SpiderSpec",
    "CaseTwoSplit",
    "make_star",
    "make_path",
    "make_spider",
    "make_double_star",
    "ub_star_closed_form",
    "ub2_path_closed_form",
    "ub2_spider_closed_form",
    "ub2_double_star_closed_form",
    "case2_split",
    "case2_transform",
    "RelaxationInstance",
    "RelaxationSolution",
    "objective_e1",
    "claimed_e1",
    "solve_e1",
    "e1_value_identity",
    "case12_objective",
    "claimed_case12",
    "solve_case12",
    "case12_value_identity",
    "case2_objective",
    "claimed_case2",
    "case2_bound",
    "solve_case2",
    "case2_value_identity",
    "iter_sweep_solutions",
    "sweep_claims",
    "ExtremalReport",
    "CaseTwoRecord",
    "verify_order",
    "verify_range",
    "verify_distance3_equality_argument",
    "verify_case2_decrease",
    "case2_decrease_records",
    "reports_to_csv",
    "reports_to_json",
]
