"""Instance types: graphs, CNF formulas and assignments, seeded generators
and the worked Figure-1 graph. DIMACS parsing and printing live in
``hlab.language``."""
from .graph import Graph
from .cnf import CnfFormula, Assignment, literal_element, element_literal, literal_label
from .generators import DEFAULT_SEED, derive_seed, random_graph, random_hamiltonian_graph, random_cnf
from .figure1 import (
    FIGURE1_EDGES,
    FIGURE1_PERMUTATION_C,
    FIGURE1_PERMUTATION_D,
    FIGURE1_PI_STAR,
    FIGURE1_SECOND_CYCLE,
    figure1_graph,
)

__all__ = [
    "Graph",
    "CnfFormula",
    "Assignment",
    "literal_element",
    "element_literal",
    "literal_label",
    "DEFAULT_SEED",
    "derive_seed",
    "random_graph",
    "random_hamiltonian_graph",
    "random_cnf",
    "FIGURE1_EDGES",
    "FIGURE1_PERMUTATION_C",
    "FIGURE1_PERMUTATION_D",
    "FIGURE1_PI_STAR",
    "FIGURE1_SECOND_CYCLE",
    "figure1_graph",
]
