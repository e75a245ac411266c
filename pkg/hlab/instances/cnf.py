from ..error import ContractError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict, Iterable, List, Sequence, Tuple

__all__ = [
    "CnfFormula",
    "Assignment",
    "literal_element",
    "element_literal",
    "literal_label",
]


def literal_element(literal):
    # type: (int) -> int
    """Maps the DIMACS literal +/-v to its ground element: 2(v-1) for x_v and
    2(v-1)+1 for its negation."""
    assert literal != 0, "0 is not a literal."
    return 2 * (abs(literal) - 1) + (1 if literal < 0 else 0)


def element_literal(element):
    # type: (int) -> int
    variable = element // 2 + 1
    return -variable if element % 2 else variable


def literal_label(literal):
    # type: (int) -> str
    if literal < 0:
        return "~x{}".format(-literal)
    return "x{}".format(literal)


class CnfFormula(object):
    """A CNF formula over variables 1..num_vars with DIMACS-style literals."""

    __slots__ = ("num_vars", "clauses")

    def __init__(self, num_vars, clauses):
        # type: (int, Iterable[Sequence[int]]) -> None
        if num_vars < 0:
            raise ContractError("Variable count must be non-negative.")
        normalized = []  # type: List[Tuple[int, ...]]
        for clause in clauses:
            if not clause:
                raise ContractError("Empty clauses are not allowed.")
            seen = []  # type: List[int]
            for literal in clause:
                if literal == 0 or abs(literal) > num_vars:
                    raise ContractError(
                        "Literal {} is out of range for {} variables.".format(
                            literal, num_vars
                        )
                    )
                if literal not in seen:
                    seen.append(literal)
            normalized.append(tuple(seen))
        self.num_vars = num_vars
        self.clauses = tuple(normalized)  # type: Tuple[Tuple[int, ...], ...]

    @property
    def ground_size(self):
        # type: () -> int
        return 2 * self.num_vars

    def is_satisfied_by(self, values):
        # type: (Dict[int, bool]) -> bool
        """True when every clause has a literal made true by the total values."""
        return all(
            any(values[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )

    def __eq__(self, other):
        # type: (Any) -> bool
        return (
            isinstance(other, CnfFormula)
            and self.num_vars == other.num_vars
            and self.clauses == other.clauses
        )

    def __hash__(self):
        return hash((self.num_vars, self.clauses))

    def __repr__(self):
        # type: () -> str
        return "CnfFormula(num_vars={}, clauses={})".format(
            self.num_vars, len(self.clauses)
        )


class Assignment(object):
    """A possibly partial truth assignment, as a polarity per variable."""

    __slots__ = ("values",)

    def __init__(self, values=None):
        # type: (Dict[int, bool]) -> None
        self.values = dict(values or {})

    @classmethod
    def from_literals(cls, literals):
        # type: (Iterable[int]) -> Assignment
        values = {}  # type: Dict[int, bool]
        for literal in literals:
            variable, polarity = abs(literal), literal > 0
            if values.get(variable, polarity) != polarity:
                raise ContractError(
                    "Literals {} and {} are contrary.".format(variable, -variable)
                )
            values[variable] = polarity
        return cls(values)

    def literals(self):
        # type: () -> List[int]
        return [v if self.values[v] else -v for v in sorted(self.values)]

    def is_total(self, num_vars):
        # type: (int) -> bool
        return all(v in self.values for v in range(1, num_vars + 1))

    def __eq__(self, other):
        # type: (Any) -> bool
        return isinstance(other, Assignment) and self.values == other.values

    def __repr__(self):
        # type: () -> str
        return "Assignment({})".format(self.literals())
