"""Desk-scale capacity caps.

Every exhaustive operation checks its instance size against one of these
named caps before doing any work.
"""
from .error import CapacityError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Dict, Optional

FAMILY_GROUND = "family_ground"
FAMILY_ENUMERATION = "family_enumeration"
HCP_VERTICES = "hcp_vertices"
SAT_VARIABLES = "sat_variables"
MISP_VERTICES = "misp_vertices"
COVER_VERTICES = "cover_vertices"

DEFAULT_CAPS = {
    FAMILY_GROUND: 24,
    FAMILY_ENUMERATION: 4,
    HCP_VERTICES: 10,
    SAT_VARIABLES: 12,
    MISP_VERTICES: 16,
    COVER_VERTICES: 10,
}  # type: Dict[str, int]

CAP_DESCRIPTIONS = {
    FAMILY_GROUND: "Ground set size",
    FAMILY_ENUMERATION: "Ground set size for family enumeration",
    HCP_VERTICES: "Vertex count for Hamiltonian cycle search",
    SAT_VARIABLES: "Variable count for satisfiability search",
    MISP_VERTICES: "Vertex count for independent set enumeration",
    COVER_VERTICES: "Vertex count for cycle cover enumeration",
}  # type: Dict[str, str]


def check_capacity(name, value, cap=None):
    # type: (str, int, Optional[int]) -> None
    if cap is None:
        cap = DEFAULT_CAPS[name]
    if value > cap:
        raise CapacityError(CAP_DESCRIPTIONS[name], value, cap)


def lowered_caps(max_n):
    # type: (Optional[int]) -> Dict[str, int]
    """Returns the default caps, each lowered to max_n when max_n is smaller."""
    caps = dict(DEFAULT_CAPS)
    if max_n is not None:
        for name, cap in caps.items():
            caps[name] = min(cap, max_n)
    return caps
