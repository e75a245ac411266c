from ..error import ContractError
from ..limits import FAMILY_ENUMERATION, check_capacity
from .family import SetFamily
from .ground import GroundSet

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Iterator, List, Set

__all__ = ["enumerate_hereditary_families"]


def enumerate_hereditary_families(ground_size):
    # type: (int) -> Iterator[SetFamily]
    """Yields every non-empty downward-closed family over ground_size elements
    exactly once.

    Subsets are decided in order of (size, mask); a subset may join only if
    every subset one element smaller already has, which makes each decision
    sequence a distinct down-set. The empty set is always a member.
    """
    if ground_size < 0:
        raise ContractError("Ground set size must be non-negative.")
    check_capacity(FAMILY_ENUMERATION, ground_size)
    ground = GroundSet(ground_size)
    subsets = sorted(range(1, 1 << ground_size), key=lambda m: (bin(m).count("1"), m))
    chosen = {0}  # type: Set[int]

    def admissible(mask):
        # type: (int) -> bool
        bit = 1
        while bit <= mask:
            if mask & bit and (mask ^ bit) not in chosen:
                return False
            bit <<= 1
        return True

    def walk(position):
        # type: (int) -> Iterator[SetFamily]
        if position == len(subsets):
            yield SetFamily(ground, chosen)
            return
        mask = subsets[position]
        for _ in walk(position + 1):
            yield _
        if admissible(mask):
            chosen.add(mask)
            for _ in walk(position + 1):
                yield _
            chosen.discard(mask)

    return walk(0)
