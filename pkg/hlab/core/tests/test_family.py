from hypothesis import given, strategies as st
from pytest import raises

from hlab.core import GroundSet, SetFamily, downward_closure, is_hereditary
from hlab.error import CapacityError, ContractError
from hlab.pyutils.bits import iter_submasks

AB = GroundSet(2)
ABC = GroundSet(3)


def test_ground_set_labels():
    # type: () -> None
    assert ABC.labels == ("a", "b", "c")
    assert ABC.describe(0b101) == "{a,c}"
    assert ABC.describe(0) == "{}"
    assert ABC.mask_of_labels(["c", "a"]) == 0b101
    assert GroundSet(27).labels[26] == "r27"


def test_ground_set_rejects_duplicate_labels():
    # type: () -> None
    with raises(AssertionError) as excinfo:
        GroundSet(2, ["a", "a"])
    assert str(excinfo.value) == "Ground set labels must be unique."


def test_power_set_is_hereditary():
    # type: () -> None
    family = SetFamily(AB, [0, 1, 2, 3])
    assert is_hereditary(family) == (True, None)


def test_missing_subset_is_reported():
    # type: () -> None
    hereditary, witness = is_hereditary(SetFamily(AB, [0b11]))
    assert not hereditary
    assert witness == (0b11, 0b01)


def test_family_must_be_non_empty_and_in_range():
    # type: () -> None
    with raises(ContractError):
        SetFamily(AB, [])
    with raises(ContractError) as excinfo:
        SetFamily(AB, [0, 0b100])
    assert "outside a ground set of size 2" in excinfo.value.message


def test_closure_of_a_pair():
    # type: () -> None
    family = downward_closure(AB, [0b11])
    assert family.members == frozenset([0, 1, 2, 3])


def test_closure_of_nothing_is_the_empty_set():
    # type: () -> None
    family = downward_closure(AB, [])
    assert family.members == frozenset([0])
    assert is_hereditary(family) == (True, None)


def test_closure_of_path_independent_sets():
    # type: () -> None
    family = downward_closure(ABC, [0b101, 0b010])
    assert sorted(family.members) == [0b000, 0b001, 0b010, 0b100, 0b101]
    assert family.maximal_sets() == [0b010, 0b101]
    assert family.extensions(0b001) == 0b100
    assert family.extensions(0b010) == 0
    assert family.by_size() == {0: [0], 1: [1, 2, 4], 2: [5]}


def test_closure_rejects_sets_outside_the_ground_set():
    # type: () -> None
    with raises(ContractError):
        downward_closure(AB, [0b100])


def test_closure_respects_the_ground_cap():
    # type: () -> None
    with raises(CapacityError) as excinfo:
        downward_closure(GroundSet(25), [1])
    assert excinfo.value.cap == 24


def test_families_respect_the_ground_cap():
    # type: () -> None
    with raises(CapacityError) as excinfo:
        SetFamily(GroundSet(25), [0, 1])
    assert excinfo.value.cap == 24
    family = SetFamily(GroundSet(24), [0])
    assert family.maximal_sets() == [0]


def test_empty_ground_set_has_one_family():
    # type: () -> None
    family = SetFamily(GroundSet(0), [0])
    assert len(family) == 1
    assert family.maximal_sets() == [0]
    assert is_hereditary(family) == (True, None)
    with raises(ContractError):
        SetFamily(GroundSet(0), [1])


@given(st.lists(st.integers(0, 63), max_size=5))
def test_closure_is_hereditary_and_exact(tops):
    family = downward_closure(GroundSet(6), tops)
    assert is_hereditary(family) == (True, None)
    expected = {0}
    for top in tops:
        expected.update(iter_submasks(top))
    assert family.members == frozenset(expected)
