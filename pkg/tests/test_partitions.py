"""Tests for basic partition combinatorics."""

from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles
from selfext.partitions import (
    addable_nodes,
    add_node,
    check_partition,
    content,
    dominates,
    format_partition,
    is_p_regular,
    is_p_restricted,
    node_residue,
    parse_partition,
    partitions_of,
    remove_node,
    removable_nodes,
    transpose,
)


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        cap = min(remaining, parts[-1] if parts else remaining)
        part = draw(st.integers(min_value=1, max_value=cap))
        parts.append(part)
        remaining -= part
    return tuple(parts)


def test_check_partition_accepts_and_normalizes():
    assert check_partition([4, 2, 1]) == (4, 2, 1)
    assert check_partition(()) == ()


def test_check_partition_strips_trailing_zeros():
    assert check_partition((1, 0)) == (1,)
    assert check_partition((0,)) == ()


def test_check_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        check_partition((2, 3))
    with pytest.raises(ValueError):
        check_partition((1, 0, 1))
    with pytest.raises(ValueError):
        check_partition((-1,))


def test_is_p_regular_examples():
    assert not is_p_regular((2, 1, 1, 1), 3)
    assert is_p_regular((4, 2, 1), 3)
    assert is_p_regular((6, 2, 1, 1, 1), 5)


def test_is_p_restricted_examples():
    assert is_p_restricted((4, 2, 1), 3)
    assert not is_p_restricted((4, 1), 3)
    assert is_p_restricted((), 3)


def test_transpose_examples():
    assert transpose((4, 2, 1)) == (3, 2, 1, 1)
    assert transpose(()) == ()
    # self-conjugate: column counts 9,4,2,2,1,1,1,1,1
    assert transpose((9, 4, 2, 2, 1, 1, 1, 1, 1)) == (9, 4, 2, 2, 1, 1, 1, 1, 1)


def test_dominates_examples():
    assert dominates((4, 2, 1), (3, 3, 1))
    assert not dominates((3, 3, 1), (4, 2, 1))
    assert dominates((4, 2, 1), (4, 2, 1))


def test_dominates_rejects_size_mismatch():
    with pytest.raises(ValueError):
        dominates((2, 1), (2, 2))


def test_node_residue_examples():
    assert node_residue((2, 3), 3) == 1
    assert node_residue((1, 1), 5) == 0
    assert node_residue((3, 1), 3) == 1


def test_content_examples():
    assert content((4, 2, 1), 3) == (3, 2, 2)
    assert content((), 3) == (0, 0, 0)
    assert content((1, 1, 1), 3) == (1, 1, 1)


def test_removable_and_addable_examples():
    assert removable_nodes((4, 2, 1)) == [(1, 4), (2, 2), (3, 1)]
    assert addable_nodes((4, 2, 1)) == [(1, 5), (2, 3), (3, 2), (4, 1)]
    assert removable_nodes(()) == []
    assert addable_nodes(()) == [(1, 1)]


def test_add_and_remove_node():
    assert remove_node((4, 2, 1), (2, 2)) == (4, 1, 1)
    assert add_node((4, 2, 1), (4, 1)) == (4, 2, 1, 1)
    with pytest.raises(ValueError):
        remove_node((4, 2, 1), (1, 1))
    with pytest.raises(ValueError):
        add_node((4, 2, 1), (3, 3))


def test_parse_and_format():
    assert parse_partition("4,2^3,1") == (4, 2, 2, 2, 1)
    assert parse_partition("-") == ()
    assert format_partition((4, 2, 2, 2, 1)) == "4,2^3,1"
    assert format_partition(()) == "-"


def test_parse_rejects_malformed():
    for text in ("4,x", "2,3", "1^0", "4,,1", "^2"):
        with pytest.raises(ValueError):
            parse_partition(text)


def test_partitions_of_counts():
    counts = [len(list(partitions_of(n))) for n in range(10)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partitions_of_respects_max_part():
    assert list(partitions_of(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_matches_oracle():
    for n in range(11):
        assert sorted(partitions_of(n)) == sorted(oracles.partitions_of(n))


@given(partition_strategy())
def test_transpose_involution(la):
    assert transpose(transpose(la)) == la
    assert transpose(la) == oracles.conjugate(la)


@given(partition_strategy())
def test_content_sums_to_size(la):
    for p in (3, 5):
        assert sum(content(la, p)) == sum(la)


@given(partition_strategy())
def test_content_transpose_symmetry(la):
    for p in (3, 5):
        cont = content(la, p)
        flipped = content(transpose(la), p)
        assert all(flipped[i] == cont[(-i) % p] for i in range(p))


@given(partition_strategy())
def test_removable_addable_counts(la):
    assert len(removable_nodes(la)) == len(addable_nodes(la)) - 1


@given(partition_strategy())
def test_text_round_trip(la):
    assert parse_partition(format_partition(la)) == la


def test_regular_iff_transpose_restricted():
    for n in range(15):
        for la in partitions_of(n):
            for p in (3, 5, 7):
                assert is_p_regular(la, p) == is_p_restricted(transpose(la), p)


def test_dominance_partial_order_on_small_sizes():
    for n in (5, 6):
        las = list(partitions_of(n))
        for la in las:
            assert dominates(la, la)
            for mu in las:
                if dominates(la, mu) and dominates(mu, la):
                    assert la == mu
                for nu in las:
                    if dominates(la, mu) and dominates(mu, nu):
                        assert dominates(la, nu)
