from ..limits import MISP_VERTICES, check_capacity
from ..pyutils.bits import bits_of, iter_bits
from .base import IndependenceOracle, OracleVerdict

# Necessary for static type checking
if False:  # flake8: noqa
    from ..instances.graph import Graph

__all__ = ["MispOracle"]


class MispOracle(IndependenceOracle):
    """Independent vertex sets of a graph. One unit of work is one adjacency
    probe, so extending a partial set costs at most one probe per member."""

    kind = "misp"

    def __init__(self, graph, name=None):
        # type: (Graph, str) -> None
        super(MispOracle, self).__init__(name)
        self.graph = graph

    @property
    def ground_size(self):
        # type: () -> int
        return self.graph.n

    def element_label(self, element):
        # type: (int) -> str
        return self.graph.vertex_label(element)

    def check_capacity(self):
        # type: () -> None
        check_capacity(MISP_VERTICES, self.graph.n)

    def decide(self, mask):
        # type: (int) -> OracleVerdict
        vertices = bits_of(mask)
        probes = 0
        for i, u in enumerate(vertices):
            for v in vertices[i + 1 :]:
                probes += 1
                if self.graph.neighbor_masks[u] >> v & 1:
                    return OracleVerdict(False, probes)
        return OracleVerdict(True, probes)

    def decide_extension(self, mask, element):
        # type: (int, int) -> OracleVerdict
        neighbors = self.graph.neighbor_masks[element]
        probes = 0
        for u in iter_bits(mask):
            probes += 1
            if neighbors >> u & 1:
                return OracleVerdict(False, probes)
        return OracleVerdict(True, probes)

    def is_independent(self, mask):
        # type: (int) -> bool
        return all(not self.graph.neighbor_masks[u] & mask for u in iter_bits(mask))
