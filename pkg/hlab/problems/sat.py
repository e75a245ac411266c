import itertools

from ..limits import SAT_VARIABLES, check_capacity
from ..instances.cnf import element_literal, literal_element, literal_label
from ..pyutils.bits import iter_bits, mask_of
from .base import IndependenceOracle, OracleVerdict

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Dict, List, Optional, Tuple
    from ..instances.cnf import CnfFormula

__all__ = ["SatOracle", "satisfiable_extension"]


def satisfiable_extension(formula, values):
    # type: (CnfFormula, Dict[int, bool]) -> Tuple[bool, int]
    """Decides whether the partial values extend to a model of the formula by
    complete backtracking with unit propagation.

    Returns (extendable, nodes) where nodes counts the search nodes: the root
    plus one per branching decision.
    """
    counter = [0]
    found = _search(formula.clauses, dict(values), counter)
    return found, counter[0]


def _search(clauses, values, counter):
    counter[0] += 1
    while True:
        unit = None  # type: Optional[int]
        open_clause = None
        for clause in clauses:
            unassigned = []
            satisfied = False
            for lit in clause:
                value = values.get(abs(lit))
                if value is None:
                    unassigned.append(lit)
                elif value == (lit > 0):
                    satisfied = True
                    break
            if satisfied:
                continue
            if not unassigned:
                return False
            if open_clause is None:
                open_clause = unassigned
            if unit is None and len(unassigned) == 1:
                unit = unassigned[0]
        if open_clause is None:
            return True
        if unit is None:
            break
        values[abs(unit)] = unit > 0

    variable = min(abs(lit) for lit in open_clause)
    for polarity in (True, False):
        branch = dict(values)
        branch[variable] = polarity
        if _search(clauses, branch, counter):
            return True
    return False


class SatOracle(IndependenceOracle):
    """Literal sets contained in some model of a CNF formula. Element 2(v-1)
    is x_v and 2(v-1)+1 its negation; contrary pairs are never members."""

    kind = "sat"

    def __init__(self, formula, name=None):
        # type: (CnfFormula, str) -> None
        super(SatOracle, self).__init__(name)
        self.formula = formula

    @property
    def ground_size(self):
        # type: () -> int
        return self.formula.ground_size

    def element_label(self, element):
        # type: (int) -> str
        return literal_label(element_literal(element))

    def check_capacity(self):
        # type: () -> None
        check_capacity(SAT_VARIABLES, self.formula.num_vars)

    def decide(self, mask):
        # type: (int) -> OracleVerdict
        values = {}  # type: Dict[int, bool]
        for element in iter_bits(mask):
            literal = element_literal(element)
            if values.get(abs(literal), literal > 0) != (literal > 0):
                return OracleVerdict(False, 1)
            values[abs(literal)] = literal > 0
        found, nodes = satisfiable_extension(self.formula, values)
        return OracleVerdict(found, nodes)

    def support_solutions(self):
        # type: () -> List[int]
        # Maximal members are exactly the models, all of size num_vars.
        self.check_capacity()
        n = self.formula.num_vars
        models = []  # type: List[int]
        for bits in itertools.product((True, False), repeat=n):
            values = {v + 1: bits[v] for v in range(n)}
            if self.formula.is_satisfied_by(values):
                models.append(
                    mask_of(literal_element(v if values[v] else -v) for v in values)
                )
        self.queries += 1
        self.work += 1 << n
        return sorted(models, key=lambda m: list(iter_bits(m)))
