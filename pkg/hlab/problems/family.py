from ..limits import FAMILY_GROUND, check_capacity
from .base import IndependenceOracle, OracleVerdict

# Necessary for static type checking
if False:  # flake8: noqa
    from ..core.family import SetFamily

__all__ = ["FamilyOracle"]


class FamilyOracle(IndependenceOracle):
    """An explicit SetFamily answered by table lookup, one unit per query."""

    kind = "family"

    def __init__(self, family, name=None):
        # type: (SetFamily, str) -> None
        super(FamilyOracle, self).__init__(name)
        self.family = family

    @property
    def ground_size(self):
        # type: () -> int
        return self.family.ground.size

    def element_label(self, element):
        # type: (int) -> str
        return self.family.ground.labels[element]

    def check_capacity(self):
        # type: () -> None
        check_capacity(FAMILY_GROUND, self.family.ground.size)

    def decide(self, mask):
        # type: (int) -> OracleVerdict
        return OracleVerdict(mask in self.family, 1)
