from hlab.pyutils.bits import bits_of, is_subset, iter_submasks, mask_of, popcount


def test_mask_round_trip():
    # type: () -> None
    assert mask_of([0, 2, 5]) == 0b100101
    assert bits_of(0b100101) == [0, 2, 5]
    assert mask_of([]) == 0
    assert bits_of(0) == []


def test_popcount():
    # type: () -> None
    assert popcount(0) == 0
    assert popcount(0b1011) == 3


def test_submasks_cover_every_subset_once():
    # type: () -> None
    subs = list(iter_submasks(0b1010))
    assert sorted(subs) == [0b0000, 0b0010, 0b1000, 0b1010]
    assert list(iter_submasks(0)) == [0]


def test_is_subset():
    # type: () -> None
    assert is_subset(0b010, 0b110)
    assert not is_subset(0b001, 0b110)
    assert is_subset(0, 0)
