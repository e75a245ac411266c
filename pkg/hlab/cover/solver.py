import logging

from ..error import ContractError
from ..limits import COVER_VERTICES, check_capacity
from ..problems.hcp import HcpOracle
from .assignment import cover_from_permutation, enumerate_assignment_solutions
from .partition import CycleCoverPartition, CyclePart, EdgePart

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, List, Optional, Sequence
    from ..instances.graph import Graph

__all__ = [
    "min_cycle_cover",
    "LemmaReport",
    "lemma_hmc_check",
    "GreedyCoverReport",
    "greedy_cover_probe",
]

logger = logging.getLogger(__name__)


def _cover_dict(cover):
    # type: (Optional[CycleCoverPartition]) -> Optional[Dict[str, Any]]
    return cover.to_dict() if cover is not None else None


def min_cycle_cover(graph):
    # type: (Graph) -> Optional[CycleCoverPartition]
    """The cover with fewest parts, ties broken by the smallest canonical
    encoding; None when the graph has no cover."""
    best = None  # type: Optional[CycleCoverPartition]
    best_key = None
    for sigma in enumerate_assignment_solutions(graph):
        cover = cover_from_permutation(graph, sigma)
        key = (cover.part_count, cover.canonical_key())
        if best_key is None or key < best_key:
            best, best_key = cover, key
    logger.debug("%r: minimum cover %r", graph, best)
    return best


class LemmaReport(object):
    __slots__ = ("hamiltonian", "cover", "single_hamiltonian_part", "verified_by_oracle")

    def __init__(self, hamiltonian, cover, single_hamiltonian_part, verified_by_oracle):
        # type: (bool, Optional[CycleCoverPartition], bool, bool) -> None
        self.hamiltonian = hamiltonian
        self.cover = cover
        self.single_hamiltonian_part = single_hamiltonian_part
        self.verified_by_oracle = verified_by_oracle

    @property
    def part_count(self):
        # type: () -> Optional[int]
        return self.cover.part_count if self.cover is not None else None

    @property
    def holds(self):
        # type: () -> bool
        """Hamiltonian graphs must have a one-part minimum cover."""
        return not self.hamiltonian or self.verified_by_oracle

    @property
    def vacuous(self):
        # type: () -> bool
        return not self.hamiltonian

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "hamiltonian": self.hamiltonian,
            "cover": _cover_dict(self.cover),
            "part_count": self.part_count,
            "single_hamiltonian_part": self.single_hamiltonian_part,
            "verified_by_oracle": self.verified_by_oracle,
            "holds": self.holds,
            "vacuous": self.vacuous,
        }


def lemma_hmc_check(graph):
    # type: (Graph) -> LemmaReport
    check_capacity(COVER_VERTICES, graph.n)
    oracle = HcpOracle(graph)
    oracle.check_capacity()
    hamiltonian = oracle.member(0).member
    cover = min_cycle_cover(graph)

    single = (
        cover is not None
        and cover.part_count == 1
        and isinstance(cover.parts[0], CyclePart)
        and len(cover.parts[0].vertices) == graph.n
    )
    verified = False
    if single:
        mask = graph.edge_mask_of_cycle(cover.parts[0].vertices)  # type: ignore
        verified = oracle.member(mask).member
    return LemmaReport(hamiltonian, cover, single, verified)


class GreedyCoverReport(object):
    __slots__ = ("accepted", "cover", "optimum", "dead_committed")

    def __init__(self, accepted, cover, optimum, dead_committed):
        # type: (List[int], Optional[CycleCoverPartition], Optional[int], List[int]) -> None
        self.accepted = accepted
        self.cover = cover
        self.optimum = optimum
        self.dead_committed = dead_committed

    @property
    def part_count(self):
        # type: () -> Optional[int]
        return self.cover.part_count if self.cover is not None else None

    @property
    def reached_optimum(self):
        # type: () -> bool
        return self.cover is not None and self.part_count == self.optimum

    def to_dict(self):
        # type: () -> Dict[str, Any]
        return {
            "accepted": [e + 1 for e in self.accepted],
            "cover": _cover_dict(self.cover),
            "part_count": self.part_count,
            "optimum": self.optimum,
            "reached_optimum": self.reached_optimum,
            "dead_committed": [e + 1 for e in self.dead_committed],
        }


def _full_ordering(graph, ordering):
    # type: (Graph, Optional[Sequence[int]]) -> List[int]
    if ordering is None:
        return list(range(graph.m))
    ordering = list(ordering)
    if len(set(ordering)) != len(ordering):
        raise ContractError("Edge ordering lists an edge twice.")
    for e in ordering:
        if not 0 <= e < graph.m:
            raise ContractError("Edge {} is out of range.".format(e))
    listed = set(ordering)
    return ordering + [e for e in range(graph.m) if e not in listed]


def greedy_cover_probe(graph, ordering=None):
    # type: (Graph, Optional[Sequence[int]]) -> GreedyCoverReport
    """Adds edges in the given order (unlisted edges follow in index order)
    whenever the result stays a union of disjoint paths and cycles, then
    reads the components off as a cover.

    dead_committed lists the accepted edges that lie on no Hamiltonian cycle.
    It stays empty for graphs without one, such as those under 3 vertices.
    """
    check_capacity(COVER_VERTICES, graph.n)
    n = graph.n
    degree = [0] * n
    parent = list(range(n))
    closed = set()  # type: set
    chosen = [[] for _ in range(n)]  # type: List[List[int]]
    accepted = []  # type: List[int]

    def find(v):
        # type: (int) -> int
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in _full_ordering(graph, ordering):
        u, v = graph.edges[e]
        if degree[u] == 2 or degree[v] == 2:
            continue
        root_u, root_v = find(u), find(v)
        if root_u == root_v:
            # Both endpoints of one path: the edge closes it into a cycle.
            closed.add(root_u)
        else:
            parent[root_u] = root_v
        degree[u] += 1
        degree[v] += 1
        chosen[u].append(v)
        chosen[v].append(u)
        accepted.append(e)

    components = {}  # type: Dict[int, List[int]]
    for v in range(n):
        components.setdefault(find(v), []).append(v)

    parts = []
    for root, members in sorted(components.items(), key=lambda item: item[1][0]):
        if root in closed:
            start = members[0]
            walk = [start, min(chosen[start])]
            while len(walk) < len(members):
                previous, current = walk[-2], walk[-1]
                walk.append(next(w for w in chosen[current] if w != previous))
            parts.append(CyclePart(walk))
        elif len(members) == 2:
            parts.append(EdgePart(*members))
        else:
            parts = None  # type: ignore
            break
    cover = CycleCoverPartition(parts).validate(graph) if parts is not None else None

    best = min_cycle_cover(graph)
    optimum = best.part_count if best is not None else None
    oracle = HcpOracle(graph)
    dead = set(oracle.dead_elements()) if oracle.member(0).member else set()
    report = GreedyCoverReport(
        accepted, cover, optimum, [e for e in accepted if e in dead]
    )
    logger.debug(
        "Greedy cover on %r: %s parts against an optimum of %s",
        graph,
        report.part_count,
        optimum,
    )
    return report
