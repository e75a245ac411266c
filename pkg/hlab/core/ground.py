import string

from ..pyutils.bits import iter_bits

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Optional, Sequence, Tuple

__all__ = ["GroundSet", "default_labels"]


def default_labels(size):
    # type: (int) -> Tuple[str, ...]
    if size <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:size])
    return tuple("r{}".format(i + 1) for i in range(size))


class GroundSet(object):
    """The finite set R, elements addressed by index 0..size-1.

    Size 0 is allowed: enumeration over n = 0 yields the one family holding
    only the empty set.
    """

    __slots__ = ("size", "labels")

    def __init__(self, size, labels=None):
        # type: (int, Optional[Sequence[str]]) -> None
        assert size >= 0, "Ground set size must be non-negative."
        if labels is None:
            labels = default_labels(size)
        labels = tuple(labels)
        assert len(labels) == size, "Expected {} labels, got {}.".format(
            size, len(labels)
        )
        assert len(set(labels)) == size, "Ground set labels must be unique."
        self.size = size
        self.labels = labels

    @property
    def full_mask(self):
        # type: () -> int
        return (1 << self.size) - 1

    def index_of(self, label):
        # type: (str) -> int
        return self.labels.index(label)

    def mask_of_labels(self, labels):
        # type: (Sequence[str]) -> int
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def describe(self, mask):
        # type: (int) -> str
        return u"{" + u",".join(self.labels[i] for i in iter_bits(mask)) + u"}"

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        # type: () -> str
        return "GroundSet(size={})".format(self.size)
