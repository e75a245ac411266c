"""Minimum vertex-disjoint cycle covers through the assignment relaxation:
fixed-point-free permutations that respect a graph's 0/1 adjacency matrix."""
from .matrix import AssignmentMatrix, assignment_matrix
from .partition import CycleCoverPartition, CyclePart, EdgePart, canonical_cycle
from .assignment import (
    Permutation,
    cover_from_permutation,
    enumerate_assignment_solutions,
)
from .solver import (
    GreedyCoverReport,
    LemmaReport,
    greedy_cover_probe,
    lemma_hmc_check,
    min_cycle_cover,
)

__all__ = [
    "AssignmentMatrix",
    "assignment_matrix",
    "CycleCoverPartition",
    "CyclePart",
    "EdgePart",
    "canonical_cycle",
    "Permutation",
    "cover_from_permutation",
    "enumerate_assignment_solutions",
    "GreedyCoverReport",
    "LemmaReport",
    "greedy_cover_probe",
    "lemma_hmc_check",
    "min_cycle_cover",
]
