import numpy as np

from ..error import ContractError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Iterable, Optional, Sequence
    from ..instances.graph import Graph

__all__ = ["AssignmentMatrix", "assignment_matrix"]


class AssignmentMatrix(object):
    """Symmetric 0/1 matrix with zero diagonal; entry (i, j) is 1 exactly when
    x_i and x_j are adjacent."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        # type: (Any) -> None
        entries = np.array(entries, dtype=np.int8)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ContractError("An assignment matrix must be square.")
        if not np.isin(entries, (0, 1)).all():
            raise ContractError("An assignment matrix holds only 0 and 1.")
        if not np.array_equal(entries, entries.T):
            raise ContractError("An assignment matrix must be symmetric.")
        if entries.diagonal().any():
            raise ContractError("An assignment matrix must have a zero diagonal.")
        entries.setflags(write=False)
        self.entries = entries

    @property
    def n(self):
        # type: () -> int
        return int(self.entries.shape[0])

    def __getitem__(self, key):
        # type: (Any) -> int
        return int(self.entries[key])

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, AssignmentMatrix) and np.array_equal(
            self.entries, other.entries
        )

    def ones(self):
        # type: () -> int
        return int(self.entries.sum())

    def allows(self, images):
        # type: (Sequence[int]) -> bool
        """True when every entry (i, images[i]) is 1."""
        rows = np.arange(self.n)
        return bool(self.entries[rows, np.asarray(images)].all())

    def to_text(self, circled=None):
        # type: (Optional[Sequence[int]]) -> str
        """Plain-text grid, rows and columns labelled x1..xn; with circled
        images, entries (i, circled[i]) are printed in parentheses."""
        width = max(len("x{}".format(self.n)), 3) + 1
        cell = ("{:>" + str(width) + "}").format
        lines = [cell("") + "".join(cell("x{}".format(j + 1)) for j in range(self.n))]
        for i in range(self.n):
            row = [cell("x{}".format(i + 1))]
            for j in range(self.n):
                value = str(self[i, j])
                if circled is not None and circled[i] == j:
                    value = "({})".format(value)
                row.append(cell(value))
            lines.append("".join(row))
        return "\n".join(lines) + "\n"


def assignment_matrix(graph):
    # type: (Graph) -> AssignmentMatrix
    entries = np.zeros((graph.n, graph.n), dtype=np.int8)
    for u, v in graph.edges:
        entries[u, v] = entries[v, u] = 1
    return AssignmentMatrix(entries)
