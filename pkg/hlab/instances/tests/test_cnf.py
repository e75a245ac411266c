from pytest import raises

from hlab.error import ContractError
from hlab.instances import (
    Assignment,
    CnfFormula,
    element_literal,
    literal_element,
    literal_label,
)


def test_literal_elements():
    # type: () -> None
    assert literal_element(1) == 0
    assert literal_element(-1) == 1
    assert literal_element(3) == 4
    assert literal_element(-3) == 5
    assert [element_literal(e) for e in range(4)] == [1, -1, 2, -2]
    assert literal_label(-2) == "~x2"
    assert literal_label(2) == "x2"


def test_formula_normalizes_clauses():
    # type: () -> None
    formula = CnfFormula(3, [[1, 1, -2], [3]])
    assert formula.clauses == ((1, -2), (3,))
    assert formula.ground_size == 6


def test_formula_rejects_bad_clauses():
    # type: () -> None
    with raises(ContractError):
        CnfFormula(2, [[]])
    with raises(ContractError):
        CnfFormula(2, [[3]])
    with raises(ContractError):
        CnfFormula(2, [[0]])


def test_formula_satisfaction():
    # type: () -> None
    formula = CnfFormula(2, [[1], [-1, 2]])
    assert formula.is_satisfied_by({1: True, 2: True})
    assert not formula.is_satisfied_by({1: True, 2: False})
    assert not formula.is_satisfied_by({1: False, 2: True})


def test_assignments_never_hold_contrary_literals():
    # type: () -> None
    assignment = Assignment.from_literals([2, -1])
    assert assignment.literals() == [-1, 2]
    assert not assignment.is_total(3)
    assert assignment.is_total(2)
    with raises(ContractError) as excinfo:
        Assignment.from_literals([1, -1])
    assert excinfo.value.message == "Literals 1 and -1 are contrary."
