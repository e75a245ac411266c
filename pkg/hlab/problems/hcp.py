import logging

from ..limits import HCP_VERTICES, check_capacity
from ..pyutils.bits import iter_bits
from .base import IndependenceOracle, OracleVerdict

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import List, Optional, Set, Tuple
    from ..instances.graph import Graph

__all__ = ["HamiltonianSearch", "HcpOracle", "hamiltonian_cycles"]

logger = logging.getLogger(__name__)


class HamiltonianSearch(object):
    """Backtracking search for Hamiltonian cycles through a set of required
    edges. Paths grow from vertex 0 and every expanded search node counts as
    one unit of work.

    Cycles are reported canonically: starting at vertex 0, with the smaller of
    its two cycle neighbours second.
    """

    __slots__ = ("graph", "required", "nodes", "cycles", "_path", "_first_only")

    def __init__(self, graph, required_mask=0):
        # type: (Graph, int) -> None
        self.graph = graph
        self.required = [set() for _ in range(graph.n)]  # type: List[Set[int]]
        for u, v in graph.edges_of(required_mask):
            self.required[u].add(v)
            self.required[v].add(u)
        self.nodes = 0
        self.cycles = []  # type: List[Tuple[int, ...]]
        self._path = []  # type: List[int]
        self._first_only = False

    def exists(self):
        # type: () -> bool
        self._first_only = True
        return bool(self._run())

    def all_cycles(self):
        # type: () -> List[Tuple[int, ...]]
        self._first_only = False
        return self._run()

    def _run(self):
        # type: () -> List[Tuple[int, ...]]
        self.nodes = 0
        self.cycles = []
        n = self.graph.n
        if n < 3 or any(len(r) > 2 for r in self.required):
            self.nodes = 1
            return self.cycles
        self._path = [0]
        self._expand(0, None, 1)
        logger.debug(
            "Hamiltonian search on %r: %d nodes, %d cycles", self.graph, self.nodes, len(self.cycles)
        )
        return self.cycles

    def _expand(self, v, prev, visited):
        # type: (int, Optional[int], int) -> bool
        self.nodes += 1
        graph, required, path = self.graph, self.required, self._path
        n = graph.n

        if len(path) == n:
            if not graph.neighbor_masks[v] >> 0 & 1:
                return False
            if not required[v] <= {prev, 0} or not required[0] <= {path[1], v}:
                return False
            if self._first_only:
                self.cycles.append(tuple(path))
                return True
            if path[1] < path[-1]:
                self.cycles.append(tuple(path))
            return False

        for u in graph.neighbors(v):
            if visited >> u & 1:
                continue
            if prev is not None and not required[v] <= {prev, u}:
                continue
            if prev is None and len(required[0] - {u}) > 1:
                continue
            closing = len(path) + 1 == n
            if any(
                visited >> w & 1 and w != v and (w != 0 or not closing)
                for w in required[u]
            ):
                continue
            path.append(u)
            found = self._expand(u, v, visited | (1 << u))
            path.pop()
            if found:
                return True
        return False


def hamiltonian_cycles(graph):
    # type: (Graph) -> List[Tuple[int, ...]]
    check_capacity(HCP_VERTICES, graph.n)
    return HamiltonianSearch(graph).all_cycles()


class HcpOracle(IndependenceOracle):
    """Edge sets contained in at least one Hamiltonian cycle of the graph."""

    kind = "hcp"

    def __init__(self, graph, name=None):
        # type: (Graph, str) -> None
        super(HcpOracle, self).__init__(name)
        self.graph = graph

    @property
    def ground_size(self):
        # type: () -> int
        return self.graph.m

    def element_label(self, element):
        # type: (int) -> str
        return self.graph.edge_label(element)

    def check_capacity(self):
        # type: () -> None
        check_capacity(HCP_VERTICES, self.graph.n)

    def decide(self, mask):
        # type: (int) -> OracleVerdict
        search = HamiltonianSearch(self.graph, mask)
        found = search.exists()
        return OracleVerdict(found, search.nodes)

    def support_solutions(self):
        # type: () -> List[int]
        # Hamiltonian cycles all have n edges, so none contains another and
        # every member of Q lies inside one of them.
        self.check_capacity()
        search = HamiltonianSearch(self.graph)
        cycles = search.all_cycles()
        self.queries += 1
        self.work += search.nodes
        masks = [self.graph.edge_mask_of_cycle(cycle) for cycle in cycles]
        return sorted(masks, key=lambda m: list(iter_bits(m)))
