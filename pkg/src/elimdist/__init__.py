"""Exact elimination distance, tree-depth and obstruction sets for small graphs."""

from .canon import (canonical_form, canonical_graph, connected_components, enumerate_graphs,
                    graphs_up_to, is_isomorphic)
from .distances import (EDGELESS, EMPTY_GRAPHS, FORESTS, ClassSpec, DistanceResult, EditPlan,
                        EliminationTree, check_elimination_tree, deletion_distance,
                        distance_independent_set, edit_distance, elimination_distance,
                        min_edit_distance, tree_depth)
from .errors import (BudgetExhausted, ElimdistError, FormulaError, GraphFormatError,
                     InvalidObstructionSet, NotMinorClosedError)
from .formats import parse_graph6, parse_graphs, read_graphs, write_graph6
from .graph import (Graph, complete_graph, cycle_graph, disjoint_union, empty_graph,
                    null_graph, path_graph, star_graph)
from .kernels import BACKEND
from .minors import (MinorMap, ObstructionSet, excludes, is_depth_minor, is_minor,
                     max_clique_depth_minor, minor_minimal_filter, one_step_minors)
from .obstructions import (Apex, CkSpec, apex_membership, ck_membership, ck_obstructions,
                           connection_closure, enumerate_obstructions, is_union_closed,
                           read_obstruction_file, union_closure_obstructions,
                           write_obstruction_file)

__version__ = "0.1.0"

__all__ = [
    "Apex",
    "BACKEND",
    "BudgetExhausted",
    "CkSpec",
    "ClassSpec",
    "DistanceResult",
    "EDGELESS",
    "EMPTY_GRAPHS",
    "EditPlan",
    "ElimdistError",
    "EliminationTree",
    "FORESTS",
    "FormulaError",
    "Graph",
    "GraphFormatError",
    "InvalidObstructionSet",
    "MinorMap",
    "NotMinorClosedError",
    "ObstructionSet",
    "apex_membership",
    "canonical_form",
    "canonical_graph",
    "check_elimination_tree",
    "ck_membership",
    "ck_obstructions",
    "complete_graph",
    "connected_components",
    "connection_closure",
    "cycle_graph",
    "deletion_distance",
    "disjoint_union",
    "distance_independent_set",
    "edit_distance",
    "elimination_distance",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_obstructions",
    "excludes",
    "graphs_up_to",
    "is_depth_minor",
    "is_isomorphic",
    "is_minor",
    "is_union_closed",
    "max_clique_depth_minor",
    "min_edit_distance",
    "minor_minimal_filter",
    "null_graph",
    "one_step_minors",
    "parse_graph6",
    "parse_graphs",
    "path_graph",
    "read_graphs",
    "read_obstruction_file",
    "star_graph",
    "tree_depth",
    "union_closure_obstructions",
    "write_graph6",
    "write_obstruction_file",
]
