"""
hlab is a desk-scale laboratory for hereditary set systems (R, Q): finite
families of subsets closed under taking subsets.

It checks heredity and the exchange property of explicit families, compares
the greedy algorithm with brute force, encodes independent sets, Hamiltonian
cycles and satisfying assignments as instrumented membership oracles, finds
minimum vertex-disjoint cycle covers through the assignment relaxation, and
measures the cost of building solutions one element at a time.

You may also import from each sub-package directly. For example, the
following two import statements are equivalent:

    from hlab import parse_graph
    from hlab.language.parser import parse_graph
"""
from .pyutils.version import get_version

# Explicit families and the greedy algorithm.
from .core import (
    GroundSet,
    SetFamily,
    downward_closure,
    is_hereditary,
    ExchangeViolation,
    has_exchange_property,
    is_matroid,
    WeightFunction,
    weight_of,
    greedy,
    greedy_trace,
    brute_force_max,
    theorem1_witness,
    enumerate_hereditary_families,
)

# Instances, their file formats and generators.
from .instances import (
    Graph,
    CnfFormula,
    Assignment,
    DEFAULT_SEED,
    random_graph,
    random_hamiltonian_graph,
    random_cnf,
    figure1_graph,
)
from .language.source import Source
from .language.parser import parse_graph, parse_cnf, parse_family
from .language.printer import print_graph, print_cnf, print_family

# Membership oracles.
from .problems import (
    OracleVerdict,
    PartialSolution,
    IndependenceOracle,
    MispOracle,
    HcpOracle,
    SatOracle,
    FamilyOracle,
    hamiltonian_cycles,
    misp_member,
    misp_extend,
    hcp_member,
    hcp_extend,
    sat_member,
    support_solutions,
    dead_elements,
)

# Cycle covers.
from .cover import (
    AssignmentMatrix,
    Permutation,
    CycleCoverPartition,
    assignment_matrix,
    cover_from_permutation,
    enumerate_assignment_solutions,
    min_cycle_cover,
    lemma_hmc_check,
    greedy_cover_probe,
)

# Sequential constructions.
from .sequential import (
    SequentialTrace,
    GrowthReport,
    sequential_build,
    theorem2_check,
    dump_trace,
    classify_growth,
    uf_verdict_sheet,
)

from .error import (
    HlabError,
    HlabSyntaxError,
    CapacityError,
    ContractError,
    NoAdmissibleStartError,
    format_error,
)

VERSION = (0, 1, 0, "final", 0)
__version__ = get_version(VERSION)


__all__ = (
    "__version__",
    "GroundSet",
    "SetFamily",
    "downward_closure",
    "is_hereditary",
    "ExchangeViolation",
    "has_exchange_property",
    "is_matroid",
    "WeightFunction",
    "weight_of",
    "greedy",
    "greedy_trace",
    "brute_force_max",
    "theorem1_witness",
    "enumerate_hereditary_families",
    "Graph",
    "CnfFormula",
    "Assignment",
    "DEFAULT_SEED",
    "random_graph",
    "random_hamiltonian_graph",
    "random_cnf",
    "figure1_graph",
    "Source",
    "parse_graph",
    "parse_cnf",
    "parse_family",
    "print_graph",
    "print_cnf",
    "print_family",
    "OracleVerdict",
    "PartialSolution",
    "IndependenceOracle",
    "MispOracle",
    "HcpOracle",
    "SatOracle",
    "FamilyOracle",
    "hamiltonian_cycles",
    "misp_member",
    "misp_extend",
    "hcp_member",
    "hcp_extend",
    "sat_member",
    "support_solutions",
    "dead_elements",
    "AssignmentMatrix",
    "Permutation",
    "CycleCoverPartition",
    "assignment_matrix",
    "cover_from_permutation",
    "enumerate_assignment_solutions",
    "min_cycle_cover",
    "lemma_hmc_check",
    "greedy_cover_probe",
    "SequentialTrace",
    "GrowthReport",
    "sequential_build",
    "theorem2_check",
    "dump_trace",
    "classify_growth",
    "uf_verdict_sheet",
    "HlabError",
    "HlabSyntaxError",
    "CapacityError",
    "ContractError",
    "NoAdmissibleStartError",
    "format_error",
)
