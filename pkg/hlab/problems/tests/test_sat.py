import itertools

from hypothesis import assume, given, settings, strategies as st
from pytest import raises

from hlab.error import CapacityError
from hlab.instances import CnfFormula, derive_seed, literal_element, random_cnf
from hlab.problems import (
    IndependenceOracle,
    SatOracle,
    sat_member,
    satisfiable_extension,
    support_solutions,
)
from hlab.pyutils.bits import is_subset, mask_of

CHAIN = CnfFormula(2, [[1], [-1, 2]])
CONTRADICTION = CnfFormula(1, [[1], [-1]])


def models(formula):
    n = formula.num_vars
    for bits in itertools.product((True, False), repeat=n):
        values = {v + 1: bits[v] for v in range(n)}
        if formula.is_satisfied_by(values):
            yield values


def test_membership_on_a_chain():
    # type: () -> None
    assert sat_member(CHAIN, [1]).member
    assert sat_member(CHAIN, [1, 2]).member
    assert not sat_member(CHAIN, [-1]).member
    assert not sat_member(CHAIN, [-2]).member


def test_contrary_literals_are_never_members():
    # type: () -> None
    verdict = sat_member(CHAIN, [1, -1])
    assert not verdict.member
    assert verdict.work == 1


def test_unsatisfiable_formula_has_an_empty_q():
    # type: () -> None
    assert not sat_member(CONTRADICTION, []).member
    assert SatOracle(CONTRADICTION).support_solutions() == []


def test_search_counts_nodes():
    # type: () -> None
    found, nodes = satisfiable_extension(CHAIN, {})
    assert found
    assert nodes == 1
    found, nodes = satisfiable_extension(CnfFormula(2, [[1, 2], [-1, 2], [1, -2], [-1, -2]]), {})
    assert not found
    assert nodes > 1


def test_support_solutions_are_the_models():
    # type: () -> None
    oracle = SatOracle(CHAIN)
    assert oracle.support_solutions() == [mask_of([literal_element(1), literal_element(2)])]
    assert oracle.element_label(1) == "~x1"
    assert oracle.dead_elements() == [literal_element(-1), literal_element(-2)]


def test_over_capacity_formulas_are_refused():
    # type: () -> None
    with raises(CapacityError):
        support_solutions(SatOracle(random_cnf(13, 10, 1)))


def test_membership_agrees_with_the_truth_table():
    # type: () -> None
    for sample in range(10):
        num_vars = 3 + sample
        formula = random_cnf(num_vars, 4 * num_vars, derive_seed(0x5EED, 10, sample))
        all_models = list(models(formula))
        assert sat_member(formula, []).member == bool(all_models)
        literals = [v for v in range(1, num_vars + 1)] + [-v for v in range(1, num_vars + 1)]
        queries = [[lit] for lit in literals] + [[1, 2], [-1, 3], [2, -3]]
        for query in queries:
            expected = any(
                all(values[abs(lit)] == (lit > 0) for lit in query) for values in all_models
            )
            assert sat_member(formula, query).member == expected


def planted_oracle(seed):
    return SatOracle(random_cnf(5, 20, seed, planted=True))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 2 ** 10 - 1))
def test_deleting_literals_from_a_model_keeps_membership(seed, deletions):
    oracle = planted_oracle(seed)
    supports = oracle.support_solutions()
    assert supports
    for support in supports:
        assert oracle.member(support & ~deletions).member


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 2 ** 10 - 1), st.integers(0, 9))
def test_extension_agrees_with_membership_of_the_union(seed, partial, element):
    assume(not partial >> element & 1)
    oracle = planted_oracle(seed)
    extended = oracle.extend(partial, element)
    assert extended.member == oracle.member(partial | 1 << element).member


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_support_solutions_are_maximal_and_not_nested(seed):
    oracle = planted_oracle(seed)
    supports = oracle.support_solutions()
    assert supports
    for first, second in itertools.permutations(supports, 2):
        assert not is_subset(first, second)
    for support in supports:
        assert oracle.member(support).member
        for element in range(oracle.ground_size):
            if not support >> element & 1:
                assert not oracle.extend(support, element).member
    # the models coincide with the maximal members found by search
    assert supports == IndependenceOracle.support_solutions(oracle)
