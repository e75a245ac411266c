from pytest import raises

from hlab.cover import (
    CycleCoverPartition,
    CyclePart,
    EdgePart,
    Permutation,
    cover_from_permutation,
    enumerate_assignment_solutions,
)
from hlab.error import CapacityError, ContractError
from hlab.instances import FIGURE1_PERMUTATION_C, FIGURE1_PERMUTATION_D, Graph


def test_permutation_must_be_a_bijection():
    # type: () -> None
    with raises(ContractError):
        Permutation([0, 0, 1])
    sigma = Permutation.from_one_based([2, 3, 1])
    assert sigma.images == (1, 2, 0)
    assert sigma.to_one_based() == [2, 3, 1]
    assert sigma(2) == 0


def test_permutation_cycles():
    # type: () -> None
    sigma = Permutation.from_one_based(FIGURE1_PERMUTATION_C)
    assert sigma.cycles() == [(0, 7, 1), (2, 5, 3), (4, 6)]
    assert Permutation([0, 2, 1]).fixed_points() == [0]


def test_figure1_three_part_cover(figure1):
    cover = cover_from_permutation(figure1, Permutation.from_one_based(FIGURE1_PERMUTATION_C))
    assert cover.part_count == 3
    assert cover.to_dict() == {
        "parts": [
            {"type": "cycle", "vertices": [1, 8, 2]},
            {"type": "cycle", "vertices": [3, 6, 4]},
            {"type": "edge", "vertices": [5, 7]},
        ]
    }
    assert cover.describe() == "(x1,x8,x2) (x3,x6,x4) {x5,x7}"


def test_figure1_hamiltonian_cover(figure1):
    cover = cover_from_permutation(figure1, Permutation.from_one_based(FIGURE1_PERMUTATION_D))
    assert cover.part_count == 1
    assert cover.to_dict() == {
        "parts": [{"type": "cycle", "vertices": [1, 2, 3, 6, 4, 5, 7, 8]}]
    }


def test_triangle_cover(triangle):
    cover = cover_from_permutation(triangle, [1, 2, 0])
    assert cover.parts == (CyclePart((0, 1, 2)),)


def test_invalid_permutations(triangle, p3):
    with raises(ContractError) as excinfo:
        cover_from_permutation(triangle, [0, 2, 1])
    assert excinfo.value.message == "Fixed point at x1 would need a loop."
    with raises(ContractError) as excinfo:
        cover_from_permutation(p3, [2, 0, 1])
    assert "is 0" in excinfo.value.message
    with raises(ContractError):
        cover_from_permutation(triangle, [1, 0])


def test_partition_validation(p3, triangle):
    with raises(ContractError):
        CycleCoverPartition([EdgePart(0, 1)]).validate(p3)
    with raises(ContractError):
        CycleCoverPartition([EdgePart(0, 1), EdgePart(1, 2)]).validate(p3)
    with raises(ContractError):
        CycleCoverPartition([CyclePart((0, 1, 2))]).validate(p3)
    assert CycleCoverPartition([CyclePart((2, 1, 0))]).validate(triangle) == CycleCoverPartition(
        [CyclePart((0, 1, 2))]
    )


def test_enumeration_contains_both_figure1_permutations(figure1):
    solutions = list(enumerate_assignment_solutions(figure1))
    assert Permutation.from_one_based(FIGURE1_PERMUTATION_C) in solutions
    assert Permutation.from_one_based(FIGURE1_PERMUTATION_D) in solutions
    assert [s.images for s in solutions] == sorted(s.images for s in solutions)
    assert len(set(solutions)) == len(solutions)


def test_enumeration_on_small_graphs(p3, triangle, k2):
    assert list(enumerate_assignment_solutions(p3)) == []
    assert [s.images for s in enumerate_assignment_solutions(triangle)] == [(1, 2, 0), (2, 0, 1)]
    assert [s.images for s in enumerate_assignment_solutions(k2)] == [(1, 0)]
    assert [s.images for s in enumerate_assignment_solutions(Graph(0, []))] == [()]


def test_enumeration_is_capped():
    # type: () -> None
    with raises(CapacityError):
        enumerate_assignment_solutions(Graph(11, []))


def test_partition_round_trip(figure1):
    for sigma in enumerate_assignment_solutions(figure1):
        cover = cover_from_permutation(figure1, sigma)
        again = cover_from_permutation(figure1, Permutation.from_partition(cover))
        assert again.canonical_key() == cover.canonical_key()
        for part in cover.parts:
            assert len(part.vertices) == 2 or len(part.vertices) >= 3
