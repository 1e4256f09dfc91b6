"""
核心数据模型测试
"""

import pytest
from hypothesis import given, settings

from hedonic_games.core.model import (
    GameInstance,
    Ordering,
    Partition,
    PrefProfile,
    Variant,
    canonicalize,
    coalition,
    favorite,
    has_unacceptability,
    is_strict,
    likes,
    likes_graph,
    player_compare,
    unique_favorite,
)
from hedonic_games.utils.exceptions import InvalidInputError
from tests.strategies import profiles


def test_player_compare(example_profile):
    assert player_compare(example_profile, 1, 2, 3) == Ordering.GREATER
    assert player_compare(example_profile, 1, 4, 4) == Ordering.EQUAL
    assert player_compare(example_profile, 1, 4, 1) == Ordering.LESS


def test_player_compare_rejects_out_of_range(example_profile):
    with pytest.raises(InvalidInputError):
        player_compare(example_profile, 1, 5, 2)
    with pytest.raises(InvalidInputError):
        player_compare(example_profile, 0, 1, 2)


def test_likes():
    profile = PrefProfile.from_lists([
        [[2], [3], [1], [4]],
        [[1, 3], [2], [4]],
        [[3], [1, 2], [4]],
        [[4], [1, 2, 3]],
    ])
    assert likes(profile, 1) == frozenset({2, 3})
    assert likes(profile, 2) == frozenset({1, 3})
    assert likes(profile, 3) == frozenset()
    assert likes_graph(profile)[4] == frozenset()


def test_is_strict(example_profile, stalker):
    strict = PrefProfile.from_lists([[[2], [1]], [[1], [2]]])
    assert is_strict(strict)
    assert not is_strict(example_profile)
    assert is_strict(stalker.profile)


def test_has_unacceptability(extended_stalker):
    assert has_unacceptability(PrefProfile.from_lists([[[2], [1], [3]], [[2], [1, 3]], [[3], [1, 2]]]))
    assert not has_unacceptability(PrefProfile.from_lists([[[2], [1]], [[1], [2]]]))
    assert has_unacceptability(extended_stalker.profile)


def test_unique_favorite():
    assert unique_favorite(PrefProfile.from_lists([[[2], [1]], [[1], [2]]]))
    tied = PrefProfile.from_lists([[[2, 3], [1]], [[2], [1, 3]], [[3], [1, 2]]])
    assert not unique_favorite(tied)
    assert favorite(tied, 1) is None
    lonely = PrefProfile.from_lists([[[1], [2, 3]], [[2], [1, 3]], [[3], [1, 2]]])
    assert unique_favorite(lonely)
    assert favorite(lonely, 1) is None


def test_profile_requires_self():
    with pytest.raises(InvalidInputError):
        PrefProfile.from_lists([[[2]], [[1], [2]]])


def test_profile_rejects_duplicates_and_empty_classes():
    with pytest.raises(InvalidInputError):
        PrefProfile.from_lists([[[1, 2], [2]], [[1], [2]]])
    with pytest.raises(InvalidInputError):
        PrefProfile.from_lists([[[1], [], [2]], [[1], [2]]])


def test_game_instance_checks_n(stalker):
    with pytest.raises(InvalidInputError):
        GameInstance(n=3, profile=stalker.profile, variant=Variant.B)
    assert stalker.with_variant(Variant.W).variant == Variant.W
    assert list(stalker.players) == [1, 2]


def test_partition_canonical_form():
    p = Partition.from_blocks(5, [[5, 4], [3, 1], [2]])
    assert p.blocks == ((1, 3), (2,), (4, 5))
    assert str(p) == "{1 3} {2} {4 5}"
    assert p == Partition.from_blocks(5, [[2], [4, 5], [1, 3]])
    assert hash(p) == hash(Partition.from_blocks(5, [[2], [4, 5], [1, 3]]))
    assert p.block_of(3) == (1, 3)
    assert p.together(4, 5)
    assert not p.together(1, 2)


def test_partition_rejects_overlap_and_gaps():
    with pytest.raises(InvalidInputError):
        Partition.from_blocks(3, [[1, 2], [2, 3]])
    with pytest.raises(InvalidInputError):
        Partition.from_blocks(3, [[1, 2]])
    with pytest.raises(InvalidInputError):
        Partition.from_blocks(2, [[1], [2], []])


def test_coalition_nonempty():
    assert coalition([2, 1, 2]) == frozenset({1, 2})
    with pytest.raises(InvalidInputError):
        coalition([])


def test_canonicalize_idempotent():
    once = canonicalize([[3, 2], [1]])
    assert canonicalize(once) == once


@settings(max_examples=60, deadline=None)
@given(profiles(min_n=1, max_n=6))
def test_player_compare_total_preorder(profile):
    players = range(1, profile.n + 1)
    for i in players:
        assert i not in likes(profile, i)
        for j in players:
            for k in players:
                forward = player_compare(profile, i, j, k)
                backward = player_compare(profile, i, k, j)
                flipped = {Ordering.GREATER: Ordering.LESS, Ordering.LESS: Ordering.GREATER, Ordering.EQUAL: Ordering.EQUAL}
                assert backward == flipped[forward]
                for l in players:
                    if forward != Ordering.LESS and player_compare(profile, i, k, l) != Ordering.LESS:
                        assert player_compare(profile, i, j, l) != Ordering.LESS
