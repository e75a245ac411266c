"""Function-style entry points over the oracles, taking element collections
rather than masks."""
from ..error import ContractError
from ..instances.cnf import literal_element
from ..pyutils.bits import mask_of
from .base import PartialSolution
from .hcp import HcpOracle
from .misp import MispOracle
from .sat import SatOracle

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Iterable, List, Union
    from ..instances.cnf import CnfFormula
    from ..instances.graph import Graph
    from .base import IndependenceOracle, OracleVerdict

    Elements = Union[PartialSolution, Iterable[int]]

__all__ = [
    "misp_member",
    "misp_extend",
    "hcp_member",
    "hcp_extend",
    "sat_member",
    "support_solutions",
    "dead_elements",
]


def _mask(elements, kind):
    # type: (Elements, str) -> int
    if isinstance(elements, PartialSolution):
        if elements.kind != kind:
            raise ContractError(
                "Expected a {} partial solution, got {}.".format(kind, elements.kind)
            )
        return elements.mask
    return mask_of(elements)


def misp_member(graph, vertex_set):
    # type: (Graph, Iterable[int]) -> OracleVerdict
    return MispOracle(graph).member(mask_of(vertex_set))


def misp_extend(graph, partial, v):
    # type: (Graph, Elements, int) -> OracleVerdict
    oracle = MispOracle(graph)
    mask = _mask(partial, oracle.kind)
    if not oracle.is_independent(mask):
        raise ContractError("{} is not independent.".format(oracle.describe(mask)))
    return oracle.extend(mask, v)


def hcp_member(graph, edge_set):
    # type: (Graph, Iterable[int]) -> OracleVerdict
    return HcpOracle(graph).member(mask_of(edge_set))


def hcp_extend(graph, partial, e):
    # type: (Graph, Elements, int) -> OracleVerdict
    oracle = HcpOracle(graph)
    return oracle.extend(_mask(partial, oracle.kind), e)


def sat_member(formula, literal_set):
    # type: (CnfFormula, Iterable[int]) -> OracleVerdict
    """literal_set holds DIMACS literals such as 1 or -2."""
    return SatOracle(formula).member(mask_of(literal_element(lit) for lit in literal_set))


def support_solutions(oracle):
    # type: (IndependenceOracle) -> List[int]
    oracle.check_capacity()
    return oracle.support_solutions()


def dead_elements(oracle):
    # type: (IndependenceOracle) -> List[int]
    oracle.check_capacity()
    return oracle.dead_elements()
