from ..error import ContractError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union
    from ..instances.graph import Graph

    Part = Union["EdgePart", "CyclePart"]

__all__ = ["EdgePart", "CyclePart", "CycleCoverPartition", "canonical_cycle"]


def canonical_cycle(vertices):
    # type: (Sequence[int]) -> Tuple[int, ...]
    """Rotation starting at the lowest vertex, read towards its smaller neighbour."""
    vertices = list(vertices)
    start = vertices.index(min(vertices))
    rotated = vertices[start:] + vertices[:start]
    reverse = [rotated[0]] + rotated[:0:-1]
    return tuple(min(rotated, reverse))


class EdgePart(object):
    __slots__ = ("u", "v")

    type = "edge"

    def __init__(self, u, v):
        # type: (int, int) -> None
        assert u != v, "An edge part needs two distinct vertices."
        self.u, self.v = min(u, v), max(u, v)

    @property
    def vertices(self):
        # type: () -> Tuple[int, int]
        return (self.u, self.v)

    def edge_pairs(self):
        # type: () -> List[Tuple[int, int]]
        return [(self.u, self.v)]

    def canonical(self):
        # type: () -> Tuple[int, ...]
        return (self.u, self.v)

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, EdgePart) and self.vertices == other.vertices

    def __hash__(self):
        return hash(("edge", self.vertices))

    def __repr__(self):
        # type: () -> str
        return "EdgePart({}, {})".format(self.u, self.v)


class CyclePart(object):
    """A simple cycle of at least three vertices, in traversal order."""

    __slots__ = ("vertices",)

    type = "cycle"

    def __init__(self, vertices):
        # type: (Sequence[int]) -> None
        vertices = tuple(vertices)
        assert len(vertices) >= 3, "A cycle part needs at least three vertices."
        assert len(set(vertices)) == len(vertices), "A cycle part repeats a vertex."
        self.vertices = vertices

    def edge_pairs(self):
        # type: () -> List[Tuple[int, int]]
        count = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)]

    def canonical(self):
        # type: () -> Tuple[int, ...]
        return canonical_cycle(self.vertices)

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, CyclePart) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(("cycle", self.canonical()))

    def __repr__(self):
        # type: () -> str
        return "CyclePart({})".format(list(self.vertices))


class CycleCoverPartition(object):
    """Vertex-disjoint edges and cycles of a graph covering all its vertices."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        # type: (Iterable[Part]) -> None
        self.parts = tuple(sorted(parts, key=lambda part: min(part.vertices)))

    def __len__(self):
        # type: () -> int
        return len(self.parts)

    @property
    def part_count(self):
        # type: () -> int
        return len(self.parts)

    def validate(self, graph):
        # type: (Graph) -> CycleCoverPartition
        covered = set()  # type: set
        for part in self.parts:
            overlap = covered.intersection(part.vertices)
            if overlap:
                raise ContractError(
                    "Parts share vertices {}.".format(sorted(overlap))
                )
            covered.update(part.vertices)
            for u, v in part.edge_pairs():
                if not graph.has_edge(u, v):
                    raise ContractError(
                        "Part {!r} uses the non-edge {{{}, {}}}.".format(part, u, v)
                    )
        if covered != set(range(graph.n)):
            raise ContractError(
                "Vertices {} are not covered.".format(sorted(set(range(graph.n)) - covered))
            )
        return self

    def canonical_key(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        return tuple(sorted(part.canonical() for part in self.parts))

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, CycleCoverPartition)
            and self.canonical_key() == other.canonical_key()
        )

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        # type: () -> str
        return "CycleCoverPartition({!r})".format(list(self.parts))

    def to_dict(self):
        # type: () -> Dict[str, Any]
        """JSON form, vertices 1-based as in the instance files."""
        return {
            "parts": [
                {"type": part.type, "vertices": [v + 1 for v in part.vertices]}
                for part in self.parts
            ]
        }

    def describe(self):
        # type: () -> str
        pieces = []
        for part in self.parts:
            labels = ",".join("x{}".format(v + 1) for v in part.vertices)
            pieces.append("{" + labels + "}" if part.type == "edge" else "(" + labels + ")")
        return " ".join(pieces)
