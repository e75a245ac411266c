import logging

from ..error import ContractError
from ..limits import COVER_VERTICES, check_capacity
from .partition import CycleCoverPartition, CyclePart, EdgePart

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Iterator, List, Sequence, Tuple, Union
    from ..instances.graph import Graph

__all__ = ["Permutation", "cover_from_permutation", "enumerate_assignment_solutions"]

logger = logging.getLogger(__name__)


class Permutation(object):
    """A bijection on 0..n-1, given by its image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        # type: (Sequence[int]) -> None
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ContractError("{} is not a permutation.".format(list(images)))
        self.images = images

    @classmethod
    def from_one_based(cls, images):
        # type: (Sequence[int]) -> Permutation
        return cls([image - 1 for image in images])

    @classmethod
    def from_partition(cls, partition):
        # type: (CycleCoverPartition) -> Permutation
        """Edges become 2-cycles, cycles are oriented canonically."""
        size = sum(len(part.vertices) for part in partition.parts)
        images = [None] * size  # type: List[Any]
        for part in partition.parts:
            sequence = part.canonical()
            for i, v in enumerate(sequence):
                images[v] = sequence[(i + 1) % len(sequence)]
        return cls(images)

    @property
    def n(self):
        # type: () -> int
        return len(self.images)

    def __call__(self, i):
        # type: (int) -> int
        return self.images[i]

    def to_one_based(self):
        # type: () -> List[int]
        return [image + 1 for image in self.images]

    def fixed_points(self):
        # type: () -> List[int]
        return [i for i, image in enumerate(self.images) if i == image]

    def cycles(self):
        # type: () -> List[Tuple[int, ...]]
        """Cycles in order of their smallest vertex, each read along the
        permutation from that vertex."""
        seen = set()  # type: set
        cycles = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self.images[start]
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self.images[v]
            cycles.append(tuple(cycle))
        return cycles

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        # type: () -> str
        return "Permutation({})".format(list(self.images))


def cover_from_permutation(graph, sigma):
    # type: (Graph, Union[Permutation, Sequence[int]]) -> CycleCoverPartition
    if not isinstance(sigma, Permutation):
        sigma = Permutation(sigma)
    if sigma.n != graph.n:
        raise ContractError(
            "Permutation on {} vertices for a graph on {}.".format(sigma.n, graph.n)
        )
    fixed = sigma.fixed_points()
    if fixed:
        raise ContractError(
            "Fixed point at {} would need a loop.".format(graph.vertex_label(fixed[0]))
        )
    for i, image in enumerate(sigma.images):
        if not graph.has_edge(i, image):
            raise ContractError(
                "Entry ({}, {}) of the assignment matrix is 0.".format(
                    graph.vertex_label(i), graph.vertex_label(image)
                )
            )

    parts = []
    for cycle in sigma.cycles():
        if len(cycle) == 2:
            parts.append(EdgePart(*cycle))
        else:
            parts.append(CyclePart(cycle))
    return CycleCoverPartition(parts).validate(graph)


def enumerate_assignment_solutions(graph):
    # type: (Graph) -> Iterator[Permutation]
    """Every fixed-point-free permutation respecting the adjacency matrix, in
    lexicographic order of the image arrays."""
    check_capacity(COVER_VERTICES, graph.n)
    return _assignments(graph)


def _assignments(graph):
    # type: (Graph) -> Iterator[Permutation]
    n = graph.n
    candidates = [graph.neighbors(v) for v in range(n)]
    images = []  # type: List[int]
    used = [False] * n
    count = 0

    # Explicit stack of candidate positions, one per assigned row.
    positions = [0]
    while positions:
        row = len(positions) - 1
        if row == n:
            count += 1
            yield Permutation(images)
            positions.pop()
            if images:
                used[images.pop()] = False
            continue
        position = positions[row]
        options = candidates[row]
        while position < len(options) and used[options[position]]:
            position += 1
        if position == len(options):
            positions.pop()
            if images:
                used[images.pop()] = False
            continue
        positions[row] = position + 1
        image = options[position]
        used[image] = True
        images.append(image)
        positions.append(0)
    logger.debug("%r: %d assignment solutions", graph, count)
