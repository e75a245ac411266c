from abc import ABCMeta, abstractmethod
import logging

import numpy as np
import six

from ..error import ContractError, NoAdmissibleStartError
from ..instances.generators import DEFAULT_SEED
from .trace import QueryRecord, SequentialTrace, TraceStep

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Dict, List, Optional, Sequence, Type, Union
    from ..problems.base import IndependenceOracle

__all__ = [
    "SelectionPolicy",
    "FirstFeasiblePolicy",
    "RandomPolicy",
    "GivenOrderPolicy",
    "POLICIES",
    "get_policy",
    "sequential_build",
]

logger = logging.getLogger(__name__)


class SelectionPolicy(six.with_metaclass(ABCMeta)):
    """Decides the order in which a sequential build offers elements."""

    name = None  # type: Optional[str]

    @abstractmethod
    def ordering(self, ground_size):
        # type: (int) -> List[int]
        raise NotImplementedError(
            "ordering method not implemented in {}.".format(self.__class__)
        )


class FirstFeasiblePolicy(SelectionPolicy):
    name = "first-feasible"

    def ordering(self, ground_size):
        # type: (int) -> List[int]
        return list(range(ground_size))


class RandomPolicy(SelectionPolicy):
    name = "random"

    def __init__(self, seed=DEFAULT_SEED):
        # type: (int) -> None
        self.seed = seed

    def ordering(self, ground_size):
        # type: (int) -> List[int]
        rng = np.random.default_rng(self.seed)
        return [int(e) for e in rng.permutation(ground_size)]


class GivenOrderPolicy(SelectionPolicy):
    """The listed elements first, then the unlisted ones by index."""

    name = "given-order"

    def __init__(self, order):
        # type: (Sequence[int]) -> None
        order = list(order)
        if len(set(order)) != len(order):
            raise ContractError("The given order lists an element twice.")
        self.order = order

    def ordering(self, ground_size):
        # type: (int) -> List[int]
        for element in self.order:
            if not 0 <= element < ground_size:
                raise ContractError(
                    "Element {} is out of range for a ground set of {}.".format(
                        element, ground_size
                    )
                )
        listed = set(self.order)
        return self.order + [e for e in range(ground_size) if e not in listed]


POLICIES = {
    FirstFeasiblePolicy.name: FirstFeasiblePolicy,
    RandomPolicy.name: RandomPolicy,
    GivenOrderPolicy.name: GivenOrderPolicy,
}  # type: Dict[str, Type[SelectionPolicy]]


def get_policy(name, seed=DEFAULT_SEED, order=None):
    # type: (str, int, Optional[Sequence[int]]) -> SelectionPolicy
    if name == RandomPolicy.name:
        return RandomPolicy(seed)
    if name == GivenOrderPolicy.name:
        if order is None:
            raise ContractError("The given-order policy needs an order.")
        return GivenOrderPolicy(order)
    if name == FirstFeasiblePolicy.name:
        return FirstFeasiblePolicy()
    raise ContractError(
        'Unknown policy "{}", expected one of {}.'.format(name, ", ".join(sorted(POLICIES)))
    )


def sequential_build(oracle, policy="first-feasible", seed=DEFAULT_SEED, order=None):
    # type: (IndependenceOracle, Union[str, SelectionPolicy], int, Optional[Sequence[int]]) -> SequentialTrace
    """Grows a member of Q one element at a time, offering every element once
    in policy order and keeping it when the extension stays in Q.

    Rejected elements are never offered again: by heredity no superset of the
    partial solution can take them, so the final set is a support solution.
    """
    if not isinstance(policy, SelectionPolicy):
        policy = get_policy(policy, seed, order)

    start = oracle.member(0)
    cumulative = 1 + start.work
    queries = [QueryRecord(None, start.member, start.work, cumulative)]
    if not start.member:
        raise NoAdmissibleStartError(
            "The empty set is not admissible for {!r}.".format(oracle),
            extensions={"work": cumulative},
        )
    steps = [TraceStep(None, cumulative, 0)]

    mask = 0
    for element in policy.ordering(oracle.ground_size):
        verdict = oracle.extend(mask, element)
        cumulative += 1 + verdict.work
        queries.append(QueryRecord(element, verdict.member, verdict.work, cumulative))
        if verdict.member:
            mask |= 1 << element
            steps.append(TraceStep(element, cumulative, mask))

    trace = SequentialTrace(
        oracle.kind, policy.name, oracle.ground_size, steps, queries, oracle.element_label  # type: ignore
    )
    logger.debug(
        "%s build on %r: %d steps, %d queries, work %d",
        policy.name,
        oracle,
        len(steps) - 1,
        len(queries),
        cumulative,
    )
    return trace
