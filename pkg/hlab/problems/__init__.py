"""Hereditary encodings of MISP, HCP and SAT as instrumented independence
oracles. Work counters count adjacency probes (MISP), search nodes (HCP) and
search nodes of the satisfiability search (SAT)."""
from .base import OracleVerdict, PartialSolution, IndependenceOracle
from .misp import MispOracle
from .hcp import HamiltonianSearch, HcpOracle, hamiltonian_cycles
from .sat import SatOracle, satisfiable_extension
from .family import FamilyOracle
from .api import (
    misp_member,
    misp_extend,
    hcp_member,
    hcp_extend,
    sat_member,
    support_solutions,
    dead_elements,
)

ORACLES = {"misp": MispOracle, "hcp": HcpOracle, "sat": SatOracle}

__all__ = [
    "OracleVerdict",
    "PartialSolution",
    "IndependenceOracle",
    "MispOracle",
    "HamiltonianSearch",
    "HcpOracle",
    "hamiltonian_cycles",
    "SatOracle",
    "satisfiable_extension",
    "FamilyOracle",
    "misp_member",
    "misp_extend",
    "hcp_member",
    "hcp_extend",
    "sat_member",
    "support_solutions",
    "dead_elements",
    "ORACLES",
]
