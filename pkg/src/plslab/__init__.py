"""plslab: exact local search, Flip neighborhoods and PLS reductions."""
from .core import (
    Assignment,
    Bipartition,
    Clustering,
    PointMatrix,
    Rat,
    SqrtCoord,
    WeightedGraph,
    cut_edge_weight,
    flip,
    squared_distance,
)
from .engine import (
    PivotRule,
    SearchTrace,
    TransitionGraph,
    build_transition_graph,
    improving_move,
    initial_solution,
    is_local_optimum,
    run_local_search,
    standard_solution,
)
from .problems import (
    Clause,
    EuclideanInstance,
    NaeFormula,
    ProblemKind,
    Tag,
    cost,
    flip_delta,
    is_feasible,
    neighbors,
    validate_instance,
)
from .reductions import chain_reduce, compute_delta_min_max, map_solution

__version__ = "0.1.0"
