import logging

from ..error import ContractError
from ..pyutils.bits import iter_bits, popcount
from .family import is_hereditary
from .weights import WeightFunction, weight_of

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import List, Tuple
    from .exchange import ExchangeViolation
    from .family import SetFamily

__all__ = ["greedy", "greedy_trace", "brute_force_max", "theorem1_witness"]

logger = logging.getLogger(__name__)


def _check_arity(family, w):
    # type: (SetFamily, WeightFunction) -> None
    if len(w) != family.ground.size:
        raise ContractError(
            "Expected {} weights, got {}.".format(family.ground.size, len(w))
        )


def greedy_trace(family, w):
    # type: (SetFamily, WeightFunction) -> List[int]
    """Runs the greedy algorithm and returns every intermediate set, starting
    with the empty set.

    Elements are visited by descending weight, ties broken by ascending index.
    """
    _check_arity(family, w)
    hereditary, _ = is_hereditary(family)
    if not hereditary:
        raise ContractError("Greedy requires a hereditary family.")

    order = sorted(range(family.ground.size), key=lambda i: (-w[i], i))
    current = 0
    trace = [current]
    for index in order:
        candidate = current | (1 << index)
        if candidate in family:
            current = candidate
            trace.append(current)
    return trace


def greedy(family, w):
    # type: (SetFamily, WeightFunction) -> int
    return greedy_trace(family, w)[-1]


def brute_force_max(family, w):
    # type: (SetFamily, WeightFunction) -> Tuple[int, int]
    """Member of maximum weight; among equal weights the smallest mask wins."""
    _check_arity(family, w)
    best = None
    best_weight = -1
    for mask in family:
        value = weight_of(mask, w)
        if value > best_weight:
            best, best_weight = mask, value
    return best, best_weight  # type: ignore


def theorem1_witness(family, violation):
    # type: (SetFamily, ExchangeViolation) -> WeightFunction
    """Weights on which greedy is strictly beaten, built from an exchange
    violation (pi1, pi2) with k = |pi1|.

    Elements of pi1 weigh (k + 2) * M, elements of pi2 - pi1 weigh (k + 1) * M
    and all others weigh 1, where M is one more than the number of those other
    elements. Greedy takes pi1 whole, is then blocked on pi2 - pi1, and the
    remaining unit weights can not make up the difference of at least M.
    """
    hereditary, _ = is_hereditary(family)
    if not hereditary:
        raise ContractError("A witness needs a hereditary family.")
    if not violation.is_valid_for(family):
        raise ContractError("{!r} is not an exchange violation of the family.".format(violation))

    k = popcount(violation.pi1)
    touched = violation.pi1 | violation.pi2
    scale = 1 + family.ground.size - popcount(touched)
    weights = [1] * family.ground.size
    for index in iter_bits(violation.pi1):
        weights[index] = (k + 2) * scale
    for index in iter_bits(violation.pi2 & ~violation.pi1):
        weights[index] = (k + 1) * scale
    w = WeightFunction(weights)
    logger.debug("Witness weights %s for %r", weights, violation)
    return w
