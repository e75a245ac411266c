import itertools

from pytest import raises

from hlab.core import (
    ExchangeViolation,
    GroundSet,
    SetFamily,
    downward_closure,
    has_exchange_property,
    is_matroid,
)
from hlab.error import ContractError
from hlab.pyutils.bits import mask_of


def uniform(rank, size):
    return downward_closure(
        GroundSet(size),
        [mask_of(c) for c in itertools.combinations(range(size), rank)],
    )


P3_FAMILY = downward_closure(GroundSet(3), [0b101, 0b010])


def test_uniform_matroids_have_the_exchange_property():
    # type: () -> None
    assert has_exchange_property(uniform(1, 2)) == (True, None)
    assert has_exchange_property(uniform(2, 4)) == (True, None)
    assert is_matroid(uniform(2, 4))


def test_path_family_violation():
    # type: () -> None
    exchange, violation = has_exchange_property(P3_FAMILY)
    assert not exchange
    assert violation == ExchangeViolation(0b010, 0b101)
    assert violation.is_valid_for(P3_FAMILY)
    assert violation.to_dict(P3_FAMILY) == {"pi1": "{b}", "pi2": "{a,c}"}
    assert not is_matroid(P3_FAMILY)


def test_empty_set_family_is_a_matroid():
    # type: () -> None
    assert is_matroid(downward_closure(GroundSet(3), []))


def test_exchange_needs_a_hereditary_family():
    # type: () -> None
    family = SetFamily(GroundSet(2), [0b11])
    with raises(ContractError):
        has_exchange_property(family)
    assert not is_matroid(family)


def test_invalid_violations_are_detected():
    # type: () -> None
    assert not ExchangeViolation(0b001, 0b101).is_valid_for(P3_FAMILY)
    assert not ExchangeViolation(0b000, 0b101).is_valid_for(P3_FAMILY)
    assert not ExchangeViolation(0b010, 0b111).is_valid_for(P3_FAMILY)
