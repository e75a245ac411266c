from abc import ABCMeta, abstractmethod
import logging

import six

from ..error import ContractError
from ..pyutils.bits import iter_bits, popcount

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Iterator, List, Optional, Set

__all__ = ["OracleVerdict", "PartialSolution", "IndependenceOracle"]

logger = logging.getLogger(__name__)


class OracleVerdict(object):
    """Answer to "S in Q?" with the elementary work spent deciding it."""

    __slots__ = ("member", "work")

    def __init__(self, member, work):
        # type: (bool, int) -> None
        assert work >= 0, "Work can not be negative."
        self.member = member
        self.work = work

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, OracleVerdict)
            and self.member == other.member
            and self.work == other.work
        )

    def __repr__(self):
        # type: () -> str
        return "OracleVerdict(member={}, work={})".format(self.member, self.work)


class PartialSolution(object):
    """An admissible set of elements of one problem kind."""

    __slots__ = ("kind", "mask")

    def __init__(self, kind, mask=0):
        # type: (str, int) -> None
        self.kind = kind
        self.mask = mask

    @property
    def elements(self):
        # type: () -> List[int]
        return list(iter_bits(self.mask))

    def __len__(self):
        # type: () -> int
        return popcount(self.mask)

    def __contains__(self, element):
        # type: (int) -> bool
        return bool(self.mask >> element & 1)

    def with_element(self, element):
        # type: (int) -> PartialSolution
        return PartialSolution(self.kind, self.mask | (1 << element))

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, PartialSolution)
            and self.kind == other.kind
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.kind, self.mask))

    def __repr__(self):
        # type: () -> str
        return "PartialSolution({}, {})".format(self.kind, self.elements)


class IndependenceOracle(six.with_metaclass(ABCMeta)):
    """Membership predicate of a hereditary system (R, Q) over elements
    0..ground_size-1, with counters of the queries answered and the work spent.
    """

    kind = None  # type: Optional[str]

    def __init__(self, name=None):
        # type: (Optional[str]) -> None
        self.name = name or self.kind
        self.work = 0
        self.queries = 0

    @property
    @abstractmethod
    def ground_size(self):
        # type: () -> int
        raise NotImplementedError(
            "ground_size not implemented in {}.".format(self.__class__)
        )

    @abstractmethod
    def element_label(self, element):
        # type: (int) -> str
        raise NotImplementedError(
            "element_label method not implemented in {}.".format(self.__class__)
        )

    @abstractmethod
    def decide(self, mask):
        # type: (int) -> OracleVerdict
        """Uncounted membership decision; use member() from the outside."""
        raise NotImplementedError(
            "decide method not implemented in {}.".format(self.__class__)
        )

    def decide_extension(self, mask, element):
        # type: (int, int) -> OracleVerdict
        return self.decide(mask | (1 << element))

    def check_capacity(self):
        # type: () -> None
        """Raises CapacityError when exhaustive enumeration is out of reach."""

    def _record(self, verdict):
        # type: (OracleVerdict) -> OracleVerdict
        self.queries += 1
        self.work += verdict.work
        return verdict

    def _check_mask(self, mask):
        # type: (int) -> None
        if mask < 0 or mask >> self.ground_size:
            raise ContractError(
                "Set {} uses elements outside 0..{}.".format(
                    self.describe(mask), self.ground_size - 1
                )
            )

    def member(self, mask):
        # type: (int) -> OracleVerdict
        self._check_mask(mask)
        return self._record(self.decide(mask))

    def extend(self, partial, element):
        # type: (int, int) -> OracleVerdict
        """Answers "partial + element in Q?" for an admissible partial."""
        self._check_mask(partial)
        if not 0 <= element < self.ground_size:
            raise ContractError("Element {} is out of range.".format(element))
        if partial >> element & 1:
            raise ContractError(
                "{} is already in {}.".format(
                    self.element_label(element), self.describe(partial)
                )
            )
        return self._record(self.decide_extension(partial, element))

    def partial(self, mask=0):
        # type: (int) -> PartialSolution
        return PartialSolution(self.kind, mask)  # type: ignore

    def describe(self, mask):
        # type: (int) -> str
        return u"{" + u",".join(self.element_label(i) for i in iter_bits(mask)) + u"}"

    def iter_members(self):
        # type: () -> Iterator[int]
        """Every member of Q, each reached by adding elements in index order."""
        if not self.member(0).member:
            return

        stack = [(0, 0)]
        while stack:
            mask, start = stack.pop()
            yield mask
            for element in reversed(range(start, self.ground_size)):
                candidate = mask | (1 << element)
                if self.member(candidate).member:
                    stack.append((candidate, element + 1))

    def support_solutions(self):
        # type: () -> List[int]
        """All inclusion-maximal members, ordered by their element lists."""
        members = set(self.iter_members())  # type: Set[int]
        maximal = [
            mask
            for mask in members
            if not any(
                (mask | (1 << r)) in members
                for r in range(self.ground_size)
                if not mask >> r & 1
            )
        ]
        logger.debug("%s: %d members, %d maximal", self.name, len(members), len(maximal))
        return sorted(maximal, key=lambda m: list(iter_bits(m)))

    def dead_elements(self):
        # type: () -> List[int]
        """Elements r with {r} outside Q; no support solution contains them."""
        return [r for r in range(self.ground_size) if not self.member(1 << r).member]

    def __repr__(self):
        # type: () -> str
        return "<{} {}>".format(self.__class__.__name__, self.name)
