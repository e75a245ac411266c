"""The worked example: an 8-vertex, 12-edge graph given by its adjacency
matrix, and the two circled assignment solutions drawn on that matrix.

The edge list is read off the matrix; the printed list of named edges is
unusable past e2. Numbering below is e1..e12 in this order.
"""
from .graph import Graph

__all__ = [
    "FIGURE1_EDGES",
    "FIGURE1_PERMUTATION_C",
    "FIGURE1_PERMUTATION_D",
    "FIGURE1_PI_STAR",
    "FIGURE1_SECOND_CYCLE",
    "figure1_graph",
]

# 1-based vertex pairs
FIGURE1_EDGES = (
    (1, 2),
    (1, 8),
    (2, 3),
    (2, 5),
    (2, 8),
    (3, 4),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 7),
    (7, 8),
)

# Circled entries, as 1-based images of x1..x8.
FIGURE1_PERMUTATION_C = (8, 1, 6, 3, 7, 4, 5, 2)
FIGURE1_PERMUTATION_D = (2, 3, 6, 5, 7, 4, 8, 1)

# 1-based edge numbers of the Hamiltonian cycle x1 x2 x3 x6 x4 x5 x7 x8.
FIGURE1_PI_STAR = (1, 2, 3, 7, 8, 9, 10, 12)

# The matrix admits a second Hamiltonian cycle, x1 x2 x5 x4 x3 x6 x7 x8.
FIGURE1_SECOND_CYCLE = (1, 2, 4, 6, 7, 8, 11, 12)


def figure1_graph():
    # type: () -> Graph
    return Graph(8, [(u - 1, v - 1) for u, v in FIGURE1_EDGES])
