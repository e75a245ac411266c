from ..error import ContractError
from ..pyutils.bits import iter_bits

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

__all__ = ["Graph"]


class Graph(object):
    """A simple undirected graph on vertices 0..n-1.

    Edge indices follow the order in which edges were given and never change;
    each edge is stored with its smaller endpoint first.
    """

    __slots__ = ("n", "edges", "adjacency", "neighbor_masks", "_edge_index")

    def __init__(self, n, edges):
        # type: (int, Iterable[Sequence[int]]) -> None
        if n < 0:
            raise ContractError("Vertex count must be non-negative.")
        normalized = []  # type: List[Tuple[int, int]]
        edge_index = {}  # type: Dict[Tuple[int, int], int]
        neighbors = [set() for _ in range(n)]  # type: List[set]
        for u, v in edges:
            for vertex in (u, v):
                if not 0 <= vertex < n:
                    raise ContractError(
                        "Vertex {} is out of range for {} vertices.".format(vertex, n)
                    )
            if u == v:
                raise ContractError("Loop at vertex {} is not allowed.".format(u))
            key = (min(u, v), max(u, v))
            if key in edge_index:
                raise ContractError("Duplicate edge {}.".format(key))
            edge_index[key] = len(normalized)
            normalized.append(key)
            neighbors[u].add(v)
            neighbors[v].add(u)

        self.n = n
        self.edges = tuple(normalized)  # type: Tuple[Tuple[int, int], ...]
        self.adjacency = tuple(
            frozenset(s) for s in neighbors
        )  # type: Tuple[FrozenSet[int], ...]
        self.neighbor_masks = tuple(
            sum(1 << w for w in s) for s in neighbors
        )  # type: Tuple[int, ...]
        self._edge_index = edge_index

    @property
    def m(self):
        # type: () -> int
        return len(self.edges)

    def has_edge(self, u, v):
        # type: (int, int) -> bool
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u, v):
        # type: (int, int) -> Optional[int]
        return self._edge_index.get((min(u, v), max(u, v)))

    def degree(self, v):
        # type: (int) -> int
        return len(self.adjacency[v])

    def neighbors(self, v):
        # type: (int) -> List[int]
        return sorted(self.adjacency[v])

    def edges_of(self, mask):
        # type: (int) -> List[Tuple[int, int]]
        return [self.edges[i] for i in iter_bits(mask)]

    def edge_mask_of_cycle(self, vertices):
        # type: (Sequence[int]) -> int
        """Mask of the edges joining consecutive vertices, closing the cycle."""
        mask = 0
        count = len(vertices)
        for i in range(count):
            index = self.edge_index(vertices[i], vertices[(i + 1) % count])
            if index is None:
                raise ContractError(
                    "Vertices {} and {} are not adjacent.".format(
                        vertices[i], vertices[(i + 1) % count]
                    )
                )
            mask |= 1 << index
        return mask

    @staticmethod
    def vertex_label(v):
        # type: (int) -> str
        return "x{}".format(v + 1)

    @staticmethod
    def edge_label(i):
        # type: (int) -> str
        return "e{}".format(i + 1)

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        # type: () -> str
        return "Graph(n={}, m={})".format(self.n, self.m)
