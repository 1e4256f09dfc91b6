"""
偏好扩展
把玩家之上的排序提升为联盟之上的比较（B / BB / W / WW）

约定：S\\{i} 为空时 best 与 worst 都取 {i}。
所有比较直接读 rank 表，不物化联盟排序。
"""

import logging
from typing import Collection, FrozenSet, Tuple

from hedonic_games.core.model import (
    GameInstance,
    Ordering,
    PlayerId,
    PrefProfile,
    Variant,
    check_player,
)
from hedonic_games.utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def _require_member(profile: PrefProfile, i: PlayerId, S: Collection[PlayerId]) -> None:
    check_player(profile.n, i)
    if i not in S:
        raise InvalidInputError(f"玩家 {i} 不在联盟 {sorted(S)} 中", details={"player": i})
    for j in S:
        check_player(profile.n, j)


def _best_rank(row, own: int, i: PlayerId, S: Collection[PlayerId]) -> int:
    return min((row[j] for j in S if j != i), default=own)


def _worst_rank(row, own: int, i: PlayerId, S: Collection[PlayerId]) -> int:
    return max((row[j] for j in S if j != i), default=own)


def best_set(profile: PrefProfile, i: PlayerId, S: Collection[PlayerId]) -> FrozenSet[PlayerId]:
    """S\\{i} 中 i 最偏好的那一类玩家"""
    _require_member(profile, i, S)
    row = profile.rank_row(i)
    others = [j for j in S if j != i]
    if not others:
        return frozenset({i})
    top = min(row[j] for j in others)
    return frozenset(j for j in others if row[j] == top)


def worst_set(profile: PrefProfile, i: PlayerId, S: Collection[PlayerId]) -> FrozenSet[PlayerId]:
    """S\\{i} 中 i 最不偏好的那一类玩家"""
    _require_member(profile, i, S)
    row = profile.rank_row(i)
    others = [j for j in S if j != i]
    if not others:
        return frozenset({i})
    bottom = max(row[j] for j in others)
    return frozenset(j for j in others if row[j] == bottom)


def coalition_has_unacceptable(profile: PrefProfile, i: PlayerId, S: Collection[PlayerId]) -> bool:
    _require_member(profile, i, S)
    row = profile.rank_row(i)
    own = profile.self_rank(i)
    return any(row[j] > own for j in S)


def coalition_key(game: GameInstance, i: PlayerId, S: Collection[PlayerId]) -> Tuple[int, ...]:
    """
    联盟 S 对玩家 i 的比较键，键越大越好

    compare 即两个键的大小关系。调用方须保证 i ∈ S；
    该函数处于穷举热路径，不做校验。
    """
    profile = game.profile
    row = profile.rank_row(i)
    own = profile.self_rank(i)
    variant = game.variant

    if variant == Variant.B:
        return (-_best_rank(row, own, i, S), -len(S))
    if variant == Variant.W:
        return (-_worst_rank(row, own, i, S),)

    worst = _worst_rank(row, own, i, S)
    if worst > own:
        # 含不可接受玩家的联盟彼此无差异，且劣于任何其他联盟
        return (0,)
    if variant == Variant.BB:
        return (1, -_best_rank(row, own, i, S))
    return (1, -worst)


def _order(a: Tuple[int, ...], b: Tuple[int, ...]) -> Ordering:
    if a > b:
        return Ordering.GREATER
    if a < b:
        return Ordering.LESS
    return Ordering.EQUAL


def compare(game: GameInstance, i: PlayerId, S: Collection[PlayerId], T: Collection[PlayerId]) -> Ordering:
    """按 game.variant 的扩展方式比较玩家 i 眼中的 S 与 T"""
    _require_member(game.profile, i, S)
    _require_member(game.profile, i, T)
    return _order(coalition_key(game, i, S), coalition_key(game, i, T))


def is_acceptable_coalition(game: GameInstance, i: PlayerId, S: Collection[PlayerId]) -> bool:
    """S ≽_i {i}"""
    return compare(game, i, S, (i,)) != Ordering.LESS
