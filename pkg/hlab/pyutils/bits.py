"""Helpers for subsets encoded as integer bit masks over element indices."""

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Iterable, Iterator, List


def mask_of(elements):
    # type: (Iterable[int]) -> int
    mask = 0
    for element in elements:
        assert element >= 0, "Element indices must be non-negative."
        mask |= 1 << element
    return mask


def iter_bits(mask):
    # type: (int) -> Iterator[int]
    """Yields the indices of the set bits of mask in ascending order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def bits_of(mask):
    # type: (int) -> List[int]
    return list(iter_bits(mask))


def popcount(mask):
    # type: (int) -> int
    return bin(mask).count("1")


def iter_submasks(mask):
    # type: (int) -> Iterator[int]
    """Yields every subset of mask, including mask itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_subset(small, big):
    # type: (int, int) -> bool
    return small & ~big == 0
