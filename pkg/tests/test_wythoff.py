import random

import pytest

from modwythoff.beatty import lower_wythoff
from modwythoff.wythoff import (
    is_wythoff_p,
    wythoff_p_set,
    wythoff_recursive_p_set,
)


def test_closed_form_small_sets():
    assert wythoff_p_set(0).positions() == [(0, 0)]
    assert wythoff_p_set(1).positions() == [(0, 0), (1, 2), (2, 1)]
    assert wythoff_p_set(2).positions() == [(0, 0), (1, 2), (2, 1), (3, 5), (5, 3)]


def test_entry_order_and_indices():
    s = wythoff_p_set(2)
    assert s.entries == (
        (0, (0, 0)),
        (1, (1, 2)),
        (1, (2, 1)),
        (2, (3, 5)),
        (2, (5, 3)),
    )


def test_cardinality_and_distinctness():
    for cutoff in (0, 1, 5, 40, 300):
        s = wythoff_p_set(cutoff)
        assert len(s) == 2 * cutoff + 1
        assert len(s.position_set()) == len(s)


def test_sorted_entries_are_lower_upper_pairs():
    s = wythoff_p_set(50)
    for i, (x, y) in s.entries:
        if x < y:
            assert x == lower_wythoff(i) and y == lower_wythoff(i) + i


def test_recursion_matches_closed_form():
    for cutoff in (0, 1, 2, 3, 10, 137):
        assert wythoff_recursive_p_set(cutoff).entries == wythoff_p_set(cutoff).entries
    assert wythoff_recursive_p_set(2000).entries == wythoff_p_set(2000).entries


def test_recursive_set_contains_4_7_at_cutoff_3():
    s = wythoff_recursive_p_set(3)
    assert (4, 7) in s and (7, 4) in s


def test_is_wythoff_p_examples():
    assert is_wythoff_p((0, 0))
    assert is_wythoff_p((4, 7))
    assert not is_wythoff_p((2, 2))


def test_membership_consistency_with_closed_form():
    cutoff = 30
    bound = lower_wythoff(cutoff)
    members = wythoff_p_set(cutoff).position_set()
    for x in range(bound + 1):
        for y in range(bound + 1):
            assert is_wythoff_p((x, y)) == ((x, y) in members)


def test_is_wythoff_p_symmetry_random():
    rng = random.Random(0x577D0FF)
    for _ in range(10_000):
        x = rng.randrange(0, 1 << 30)
        y = rng.randrange(0, 1 << 30)
        assert is_wythoff_p((x, y)) == is_wythoff_p((y, x))


def test_range_errors():
    with pytest.raises(ValueError):
        wythoff_p_set(-1)
    with pytest.raises(ValueError):
        wythoff_recursive_p_set(100_001)
    with pytest.raises(ValueError):
        is_wythoff_p((-1, 0))
