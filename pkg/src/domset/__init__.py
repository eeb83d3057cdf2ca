"""Exact and heuristic solvers for the minimum dominating set problem."""
from .bounds import BoundsReport, lower_bound, upper_candidates
from .exact import PriorityList, Proof, SolverConfig, bds_solve, build_priority_list, next_feasible
from .graph import (
    Graph,
    Solution,
    complete_graph,
    cycle_graph,
    eccentricity_profile,
    from_edge_list,
    is_dominating,
    parse_dimacs,
    path_graph,
    petersen_graph,
    random_connected,
    star_graph,
    write_dimacs,
)
from .greedy import active_degree, greedy_solve
from .heuristic import beta, dbs_solve, extend, make_base
from . import kernels
from .lp import write_lp
from .oracle import brute_force

__version__ = "0.1.0"
