import logging

from ..error import ContractError
from ..limits import FAMILY_GROUND, check_capacity
from ..pyutils.bits import iter_submasks, popcount

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple
    from .ground import GroundSet

__all__ = ["SetFamily", "downward_closure", "is_hereditary"]

logger = logging.getLogger(__name__)


class SetFamily(object):
    """An explicit family Q of subsets of a ground set, members as bit masks.

    Ground sets beyond the family_ground cap raise CapacityError.
    """

    __slots__ = ("ground", "members", "_sorted")

    def __init__(self, ground, members):
        # type: (GroundSet, Iterable[int]) -> None
        check_capacity(FAMILY_GROUND, ground.size)
        members = frozenset(members)
        if not members:
            raise ContractError("A set family must have at least one member.")
        full = ground.full_mask
        for mask in members:
            if mask < 0 or mask & ~full:
                raise ContractError(
                    "Member {} uses elements outside a ground set of size {}.".format(
                        bin(mask), ground.size
                    )
                )
        self.ground = ground
        self.members = members  # type: FrozenSet[int]
        self._sorted = tuple(sorted(members))

    def __contains__(self, mask):
        # type: (int) -> bool
        return mask in self.members

    def __iter__(self):
        # type: () -> Iterator[int]
        return iter(self._sorted)

    def __len__(self):
        # type: () -> int
        return len(self._sorted)

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and self.members == other.members
        )

    def __hash__(self):
        return hash((self.ground, self.members))

    def __repr__(self):
        # type: () -> str
        return "SetFamily({})".format(
            ", ".join(self.ground.describe(mask) for mask in self._sorted)
        )

    def by_size(self):
        # type: () -> Dict[int, List[int]]
        groups = {}  # type: Dict[int, List[int]]
        for mask in self._sorted:
            groups.setdefault(popcount(mask), []).append(mask)
        return groups

    def extensions(self, mask):
        # type: (int) -> int
        """Mask of the elements r outside mask with mask + r still a member."""
        result = 0
        for r in range(self.ground.size):
            bit = 1 << r
            if not mask & bit and (mask | bit) in self.members:
                result |= bit
        return result

    def maximal_sets(self):
        # type: () -> List[int]
        return [mask for mask in self._sorted if not self.extensions(mask)]


def downward_closure(ground, maximal_sets):
    # type: (GroundSet, Iterable[int]) -> SetFamily
    """Builds the family of all subsets of the given sets.

    An empty list of sets yields the family whose only member is the empty set.
    """
    check_capacity(FAMILY_GROUND, ground.size)
    members = {0}
    for top in maximal_sets:
        if top < 0 or top & ~ground.full_mask:
            raise ContractError(
                "Set {} is not a subset of the ground set.".format(bin(top))
            )
        if top in members:
            continue
        members.update(iter_submasks(top))
    logger.debug("Closure over %d elements has %d members", ground.size, len(members))
    return SetFamily(ground, members)


def is_hereditary(family):
    # type: (SetFamily) -> Tuple[bool, Optional[Tuple[int, int]]]
    """Checks that every subset of every member is a member.

    Returns (True, None), or (False, (member, missing_subset)). Only subsets
    one element smaller are inspected: if those are present for every member
    the family is closed by induction on size.
    """
    for mask in family:
        for index in reversed(range(family.ground.size)):
            bit = 1 << index
            if mask & bit and (mask ^ bit) not in family:
                return False, (mask, mask ^ bit)
    return True, None
