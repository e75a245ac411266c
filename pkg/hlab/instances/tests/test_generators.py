import itertools

from pytest import raises

from hlab.error import ContractError
from hlab.instances import (
    Graph,
    derive_seed,
    random_cnf,
    random_graph,
    random_hamiltonian_graph,
)
from hlab.problems import hamiltonian_cycles


def test_derive_seed_is_stable_and_keyed():
    # type: () -> None
    assert derive_seed(0x5EED, 1, 2) == derive_seed(0x5EED, 1, 2)
    assert derive_seed(0x5EED, 1, 2) != derive_seed(0x5EED, 1, 3)
    assert 0 <= derive_seed(7) < 2 ** 64


def test_random_graph_is_reproducible():
    # type: () -> None
    assert random_graph(10, 0.4, 11) == random_graph(10, 0.4, 11)
    assert random_graph(6, 0.0, 1).m == 0
    assert random_graph(6, 1.0, 1).m == 15
    with raises(ContractError):
        random_graph(4, 1.5, 1)


def test_planted_triangle():
    # type: () -> None
    assert random_hamiltonian_graph(3, 0, 99) == Graph(3, [(0, 1), (0, 2), (1, 2)])


def test_planted_graph_sizes():
    # type: () -> None
    graph = random_hamiltonian_graph(5, 2, 1234)
    assert graph.n == 5
    assert graph.m == 7
    assert list(graph.edges) == sorted(graph.edges)
    assert random_hamiltonian_graph(5, 2, 1234) == graph


def test_planted_cycle_is_found_by_enumeration():
    # type: () -> None
    for seed in range(10):
        graph = random_hamiltonian_graph(7, 3, seed)
        assert hamiltonian_cycles(graph)


def test_planted_graph_capacity():
    # type: () -> None
    with raises(ContractError):
        random_hamiltonian_graph(2, 0, 1)
    with raises(ContractError):
        random_hamiltonian_graph(4, 3, 1)


def test_random_cnf_shape():
    # type: () -> None
    formula = random_cnf(6, 20, 5)
    assert formula.num_vars == 6
    assert len(formula.clauses) == 20
    for clause in formula.clauses:
        assert len(set(abs(lit) for lit in clause)) == 3
    assert random_cnf(6, 20, 5) == formula
    with raises(ContractError):
        random_cnf(2, 5, 1)


def test_planted_cnf_is_satisfiable():
    # type: () -> None
    for seed in range(10):
        formula = random_cnf(6, 40, seed, planted=True)
        assert any(
            formula.is_satisfied_by({v + 1: bit for v, bit in enumerate(bits)})
            for bits in itertools.product((True, False), repeat=6)
        )
