"""
稳定性检查
IR / NS / IS / CIS / 核心 / 严格核心，以及确定性的偏离搜索

扫描顺序：偏离者按编号升序；对每个偏离者，目标依次为划分的规范块
（跳过自己的块），最后是空联盟（自己已单独成块时不考虑）。
"""

import logging
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hedonic_games.config.settings import get_settings
from hedonic_games.core.extensions import coalition_key
from hedonic_games.core.model import GameInstance, Partition, PlayerId
from hedonic_games.utils.exceptions import CapacityError, InvalidInputError

logger = logging.getLogger(__name__)


class DeviationKind(str, Enum):
    """单人偏离的三种可行性要求"""
    NS = "NS"
    IS = "IS"
    CIS = "CIS"


class Deviation(BaseModel):
    """偏离：mover 离开所在联盟加入 target（None 表示独自成块）"""

    model_config = ConfigDict(frozen=True)

    mover: PlayerId = Field(..., ge=1)
    target: Optional[Tuple[PlayerId, ...]] = Field(None, description="目标联盟；None 为空联盟")
    kind: DeviationKind

    def describe(self) -> str:
        if self.target is None:
            return f"player {self.mover} -> empty"
        return f"player {self.mover} -> {{" + " ".join(str(j) for j in self.target) + "}"


def _check_partition(game: GameInstance, partition: Partition) -> None:
    if partition.n != game.n:
        raise InvalidInputError(
            f"划分的玩家数 {partition.n} 与博弈玩家数 {game.n} 不一致",
            details={"partition_n": partition.n, "game_n": game.n}
        )


def unacceptable_in_blocks(game: GameInstance, blocks: Sequence[Tuple[PlayerId, ...]]) -> Optional[PlayerId]:
    """在原始块序列上做 IR 检查，供穷举使用"""
    for block in blocks:
        for i in block:
            if coalition_key(game, i, block) < coalition_key(game, i, (i,)):
                return i
    return None


def find_unacceptable_player(game: GameInstance, partition: Partition) -> Optional[PlayerId]:
    """第一个认为自己所在联盟不可接受的玩家"""
    _check_partition(game, partition)
    return unacceptable_in_blocks(game, partition.blocks)


def is_ir(game: GameInstance, partition: Partition) -> bool:
    return find_unacceptable_player(game, partition) is None


def _approves(game: GameInstance, members: Tuple[PlayerId, ...], after: Tuple[PlayerId, ...], before: Tuple[PlayerId, ...]) -> bool:
    """members 中每个人都弱偏好 after 于 before"""
    return all(coalition_key(game, j, after) >= coalition_key(game, j, before) for j in members)


def _source_approves(game: GameInstance, i: PlayerId, source: Tuple[PlayerId, ...]) -> bool:
    remaining = tuple(j for j in source if j != i)
    return _approves(game, remaining, remaining, source)


def find_deviation(game: GameInstance, partition: Partition, kind: DeviationKind) -> Optional[Deviation]:
    """按确定性扫描顺序返回第一个可行的改进偏离"""
    _check_partition(game, partition)
    found = scan_blocks(game, partition.blocks, kind)
    if found is None:
        return None
    mover, target = found
    return Deviation(mover=mover, target=target, kind=kind)


def scan_blocks(
    game: GameInstance,
    blocks: Sequence[Tuple[PlayerId, ...]],
    kind: DeviationKind
) -> Optional[Tuple[PlayerId, Optional[Tuple[PlayerId, ...]]]]:
    """
    在规范块序列上搜索偏离，返回 (mover, target)

    blocks 必须已是规范形式，target 为 None 表示空联盟。
    """
    owner = [0] * (game.n + 1)
    for index, block in enumerate(blocks):
        for j in block:
            owner[j] = index

    for i in game.players:
        own_index = owner[i]
        source = blocks[own_index]
        current = coalition_key(game, i, source)
        # CIS 的离开许可与目标无关，每个偏离者最多算一次
        source_ok: Optional[bool] = None

        for index, target in enumerate(blocks):
            if index == own_index:
                continue
            joined = target + (i,)
            if coalition_key(game, i, joined) <= current:
                continue
            if kind != DeviationKind.NS and not _approves(game, target, joined, target):
                continue
            if kind == DeviationKind.CIS:
                if source_ok is None:
                    source_ok = _source_approves(game, i, source)
                if not source_ok:
                    break
            return i, tuple(target)

        if len(source) > 1 and coalition_key(game, i, (i,)) > current:
            if kind == DeviationKind.CIS:
                if source_ok is None:
                    source_ok = _source_approves(game, i, source)
                if not source_ok:
                    continue
            return i, None

    return None


def is_stable(game: GameInstance, partition: Partition, kind: DeviationKind) -> bool:
    return find_deviation(game, partition, kind) is None


def apply_deviation(partition: Partition, deviation: Deviation) -> Partition:
    """执行偏离，返回新的规范划分"""
    i = deviation.mover
    blocks: List[Tuple[PlayerId, ...]] = list(partition.blocks)
    if deviation.target is not None:
        if deviation.target not in blocks:
            raise InvalidInputError(
                f"偏离目标 {list(deviation.target)} 不是划分中的联盟",
                details={"target": deviation.target}
            )
        if i in deviation.target:
            raise InvalidInputError(f"玩家 {i} 已在目标联盟中")
    result = []
    for block in blocks:
        if block == deviation.target:
            result.append(block + (i,))
        elif i in block:
            rest = tuple(j for j in block if j != i)
            if rest:
                result.append(rest)
        else:
            result.append(block)
    if deviation.target is None:
        result.append((i,))
    return Partition.from_blocks(partition.n, result)


def find_blocking_coalition(
    game: GameInstance,
    partition: Partition,
    strict: bool = False,
    cap: Optional[int] = None
) -> Optional[Tuple[PlayerId, ...]]:
    """
    第一个（弱）阻塞联盟，按规模升序、同规模字典序枚举

    strict=False: S 中每个成员都严格偏好 S
    strict=True:  每个成员弱偏好 S 且至少一人严格偏好
    """
    _check_partition(game, partition)
    cap = cap if cap is not None else get_settings().stability.core_cap
    if game.n > cap:
        raise CapacityError(
            f"核心检查的玩家数 {game.n} 超过上限 {cap}",
            cap=cap,
            requested=game.n
        )

    return blocking_in_blocks(game, partition.blocks, strict)


def blocking_in_blocks(game: GameInstance, blocks: Sequence[Tuple[PlayerId, ...]], strict: bool = False) -> Optional[Tuple[PlayerId, ...]]:
    """在原始块序列上找阻塞联盟，不做规模检查"""
    current: List[Tuple[int, ...]] = [()] * (game.n + 1)
    for block in blocks:
        for i in block:
            current[i] = coalition_key(game, i, block)
    for size in range(1, game.n + 1):
        for S in combinations(game.players, size):
            strictly_better = False
            blocked = True
            for i in S:
                key = coalition_key(game, i, S)
                if key > current[i]:
                    strictly_better = True
                elif strict and key == current[i]:
                    continue
                else:
                    blocked = False
                    break
            if blocked and strictly_better:
                return S
    return None


def is_core_stable(game: GameInstance, partition: Partition, strict: bool = False, cap: Optional[int] = None) -> bool:
    return find_blocking_coalition(game, partition, strict, cap) is None
