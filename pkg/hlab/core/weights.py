from ..error import ContractError
from ..pyutils.bits import iter_bits

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Iterable, Tuple

__all__ = ["WeightFunction", "weight_of"]


class WeightFunction(object):
    """Strictly positive integer weight per ground element."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        # type: (Iterable[int]) -> None
        weights = tuple(weights)
        for index, weight in enumerate(weights):
            if isinstance(weight, bool) or not isinstance(weight, int):
                raise ContractError(
                    "Weight of element {} must be an integer, got {!r}.".format(
                        index, weight
                    )
                )
            if weight < 1:
                raise ContractError(
                    "Weight of element {} must be positive, got {}.".format(
                        index, weight
                    )
                )
        self.weights = weights  # type: Tuple[int, ...]

    def __len__(self):
        # type: () -> int
        return len(self.weights)

    def __getitem__(self, index):
        # type: (int) -> int
        return self.weights[index]

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, WeightFunction) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        # type: () -> str
        return "WeightFunction({})".format(list(self.weights))


def weight_of(subset, w):
    # type: (int, WeightFunction) -> int
    return sum(w[index] for index in iter_bits(subset))
