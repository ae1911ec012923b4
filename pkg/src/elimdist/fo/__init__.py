"""First-order logic over graphs with guarded distance atoms."""

from .builders import (connected_bounded_sentence, deletion_formula, edge_edit_formula,
                       edgeless_sentence, has_edge_sentence, null_graph_sentence,
                       treedepth_formula)
from .evaluate import evaluate
from .sexpr import format_formula, parse_formula
from .syntax import (FALSE, TRUE, And, Colour, Dist, Edge, Eq, Exists, ForAll, Formula,
                     Guard, Implies, Not, Or, all_vars, is_sentence, neq, substitute)
from .transform import distance_formula, expand_distance_atoms, quantifier_rank, relativise

__all__ = [
    "And", "Colour", "Dist", "Edge", "Eq", "Exists", "FALSE", "ForAll", "Formula", "Guard",
    "Implies", "Not", "Or", "TRUE", "all_vars", "connected_bounded_sentence",
    "deletion_formula", "distance_formula", "edge_edit_formula", "edgeless_sentence",
    "evaluate", "expand_distance_atoms", "format_formula", "has_edge_sentence",
    "is_sentence", "neq", "null_graph_sentence", "parse_formula", "quantifier_rank",
    "relativise", "substitute", "treedepth_formula",
]
