from ..error import ContractError
from ..pyutils.bits import popcount
from .family import is_hereditary

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Optional, Tuple
    from .family import SetFamily

__all__ = ["ExchangeViolation", "has_exchange_property", "is_matroid"]


class ExchangeViolation(object):
    """Two members, pi2 one element larger, where no element of pi2 - pi1
    can be added to pi1 without leaving the family."""

    __slots__ = ("pi1", "pi2")

    def __init__(self, pi1, pi2):
        # type: (int, int) -> None
        self.pi1 = pi1
        self.pi2 = pi2

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, ExchangeViolation)
            and self.pi1 == other.pi1
            and self.pi2 == other.pi2
        )

    def __hash__(self):
        return hash((self.pi1, self.pi2))

    def __repr__(self):
        # type: () -> str
        return "ExchangeViolation(pi1={}, pi2={})".format(bin(self.pi1), bin(self.pi2))

    def is_valid_for(self, family):
        # type: (SetFamily) -> bool
        if self.pi1 not in family or self.pi2 not in family:
            return False
        if popcount(self.pi2) != popcount(self.pi1) + 1:
            return False
        return not (self.pi2 & ~self.pi1 & family.extensions(self.pi1))

    def to_dict(self, family):
        # type: (SetFamily) -> dict
        describe = family.ground.describe
        return {"pi1": describe(self.pi1), "pi2": describe(self.pi2)}


def has_exchange_property(family):
    # type: (SetFamily) -> Tuple[bool, Optional[ExchangeViolation]]
    """Checks the exchange property over every pair of members whose sizes
    differ by one. The first violation in (size, pi1, pi2) order is returned."""
    hereditary, _ = is_hereditary(family)
    if not hereditary:
        raise ContractError("The exchange property is only checked on hereditary families.")

    groups = family.by_size()
    for size in sorted(groups):
        larger = groups.get(size + 1)
        if not larger:
            continue
        for pi1 in groups[size]:
            extensions = family.extensions(pi1)
            for pi2 in larger:
                if not pi2 & ~pi1 & extensions:
                    return False, ExchangeViolation(pi1, pi2)
    return True, None


def is_matroid(family):
    # type: (SetFamily) -> bool
    hereditary, _ = is_hereditary(family)
    if not hereditary:
        return False
    exchange, _ = has_exchange_property(family)
    return exchange
