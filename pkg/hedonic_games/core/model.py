"""
核心数据模型
玩家、偏好排序、联盟、划分与博弈实例，以及偏好排序的分类谓词

玩家编号为 1..n 的稠密整数。每个玩家的偏好是一串有序的无差异类
（最偏好的在前），玩家自己必须出现在某个类中：排在自己所在类之前的
玩家是他"喜欢"的，与自己同类的玩家可以接受但不喜欢，排在自己之后的
玩家不可接受。
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from hedonic_games.utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

PlayerId = int
Coalition = FrozenSet[PlayerId]


class Variant(str, Enum):
    """由玩家排序导出联盟偏好的四种扩展方式"""
    B = "B"
    BB = "BB"
    W = "W"
    WW = "WW"


class Ordering(str, Enum):
    """比较结果"""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def check_player(n: int, i: PlayerId) -> None:
    """校验玩家编号在 1..n 内"""
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
        raise InvalidInputError(
            f"玩家编号越界: {i} (应在 1..{n} 内)",
            details={"player": i, "n": n}
        )


def coalition(members: Iterable[PlayerId]) -> Coalition:
    """构造联盟（非空玩家集合）"""
    result = frozenset(members)
    if not result:
        raise InvalidInputError("联盟不能为空")
    return result


class PrefProfile(BaseModel):
    """偏好排序：ranks[i-1] 为玩家 i 的无差异类序列"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="玩家数")
    ranks: Tuple[Tuple[Tuple[PlayerId, ...], ...], ...] = Field(..., description="每个玩家的无差异类，最偏好者在前")

    _rank: List[List[int]] = PrivateAttr(default_factory=list)
    _own: List[int] = PrivateAttr(default_factory=list)

    @field_validator("ranks", mode="before")
    @classmethod
    def _normalize_ranks(cls, value):
        # 类内按编号升序，统一为元组
        return tuple(
            tuple(tuple(sorted(int(j) for j in cls_)) for cls_ in player_classes)
            for player_classes in value
        )

    @model_validator(mode="after")
    def _check_coverage(self) -> "PrefProfile":
        if len(self.ranks) != self.n:
            raise InvalidInputError(
                f"偏好列表数量 {len(self.ranks)} 与玩家数 {self.n} 不一致"
            )
        everyone = set(range(1, self.n + 1))
        for i, classes in enumerate(self.ranks, start=1):
            seen: List[int] = []
            for cls_ in classes:
                if not cls_:
                    raise InvalidInputError(f"玩家 {i} 的偏好中存在空的无差异类", details={"player": i})
                seen.extend(cls_)
            if len(seen) != len(set(seen)) or set(seen) != everyone:
                raise InvalidInputError(
                    f"玩家 {i} 的偏好必须恰好覆盖 1..{self.n} 中每个玩家一次（包括自己）",
                    details={"player": i}
                )
        return self

    def model_post_init(self, __context) -> None:
        # 预先计算 rank 表：_rank[i][j] 为 j 在 i 的排序中所处类的下标
        rank: List[List[int]] = [[]]
        own: List[int] = [0]
        for i, classes in enumerate(self.ranks, start=1):
            row = [0] * (self.n + 1)
            for index, cls_ in enumerate(classes):
                for j in cls_:
                    if 1 <= j <= self.n:
                        row[j] = index
            rank.append(row)
            own.append(row[i] if i <= self.n else 0)
        self._rank = rank
        self._own = own

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[Iterable[PlayerId]]]) -> "PrefProfile":
        """按玩家顺序给出的类列表构造偏好排序"""
        return cls(n=len(lists), ranks=lists)

    def classes(self, i: PlayerId) -> Tuple[Tuple[PlayerId, ...], ...]:
        """玩家 i 的无差异类序列"""
        check_player(self.n, i)
        return self.ranks[i - 1]

    def rank(self, i: PlayerId, j: PlayerId) -> int:
        """j 在 i 的排序中所处类的下标（越小越偏好）"""
        check_player(self.n, i)
        check_player(self.n, j)
        return self._rank[i][j]

    def self_rank(self, i: PlayerId) -> int:
        """i 自己所在类的下标"""
        check_player(self.n, i)
        return self._own[i]

    def rank_row(self, i: PlayerId) -> List[int]:
        """rank 表的一行，下标 0 不使用；调用方只读"""
        return self._rank[i]

    def acceptable(self, i: PlayerId, j: PlayerId) -> bool:
        return self._rank[i][j] <= self._own[i]


class GameInstance(BaseModel):
    """博弈实例：玩家数 + 偏好排序 + 扩展方式"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    profile: PrefProfile
    variant: Variant = Variant.BB

    @model_validator(mode="after")
    def _check_n(self) -> "GameInstance":
        if self.profile.n != self.n:
            raise InvalidInputError(f"偏好排序的玩家数 {self.profile.n} 与博弈玩家数 {self.n} 不一致")
        return self

    @classmethod
    def build(cls, profile: PrefProfile, variant: Variant = Variant.BB) -> "GameInstance":
        return cls(n=profile.n, profile=profile, variant=variant)

    def with_variant(self, variant: Variant) -> "GameInstance":
        """同一偏好排序、换一种扩展方式"""
        return GameInstance(n=self.n, profile=self.profile, variant=variant)

    @property
    def players(self) -> range:
        return range(1, self.n + 1)


def canonicalize(blocks: Iterable[Iterable[PlayerId]]) -> Tuple[Tuple[PlayerId, ...], ...]:
    """规范形式：块内升序，块按最小成员排序"""
    normalized = []
    for block in blocks:
        members = tuple(sorted(int(j) for j in block))
        if not members:
            raise InvalidInputError("划分中存在空联盟")
        normalized.append(members)
    return tuple(sorted(normalized, key=lambda b: b[0]))


class Partition(BaseModel):
    """划分：两两不交且覆盖 1..n 的联盟集合，始终以规范形式保存"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    blocks: Tuple[Tuple[PlayerId, ...], ...]

    _owner: List[int] = PrivateAttr(default_factory=list)

    @field_validator("blocks", mode="before")
    @classmethod
    def _canonical(cls, value):
        return canonicalize(value)

    @model_validator(mode="after")
    def _check_cover(self) -> "Partition":
        members = [j for block in self.blocks for j in block]
        if len(members) != len(set(members)):
            raise InvalidInputError("划分中的联盟必须两两不交", details={"blocks": self.blocks})
        if set(members) != set(range(1, self.n + 1)):
            raise InvalidInputError(
                f"划分必须恰好覆盖 1..{self.n}",
                details={"blocks": self.blocks}
            )
        return self

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[PlayerId]]) -> "Partition":
        return cls(n=n, blocks=blocks)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n=n, blocks=[(i,) for i in range(1, n + 1)])

    @classmethod
    def grand(cls, n: int) -> "Partition":
        return cls(n=n, blocks=[tuple(range(1, n + 1))])

    def model_post_init(self, __context) -> None:
        # 私有属性参与 pydantic 的相等比较，必须由 blocks 唯一决定
        owner = [0] * (self.n + 1)
        for index, block in enumerate(self.blocks):
            for j in block:
                if 1 <= j <= self.n:
                    owner[j] = index
        self._owner = owner

    def owners(self) -> List[int]:
        """玩家 -> 所在块下标（下标 0 不使用）"""
        return self._owner

    def block_of(self, i: PlayerId) -> Tuple[PlayerId, ...]:
        """π(i)"""
        check_player(self.n, i)
        return self.blocks[self.owners()[i]]

    def together(self, i: PlayerId, j: PlayerId) -> bool:
        owner = self.owners()
        check_player(self.n, i)
        check_player(self.n, j)
        return owner[i] == owner[j]

    def __str__(self) -> str:
        return " ".join("{" + " ".join(str(j) for j in block) + "}" for block in self.blocks)


def player_compare(profile: PrefProfile, i: PlayerId, j: PlayerId, k: PlayerId) -> Ordering:
    """按玩家 i 的排序比较 j 与 k"""
    rj = profile.rank(i, j)
    rk = profile.rank(i, k)
    if rj < rk:
        return Ordering.GREATER
    if rj > rk:
        return Ordering.LESS
    return Ordering.EQUAL


def likes(profile: PrefProfile, i: PlayerId) -> FrozenSet[PlayerId]:
    """i 严格偏好于自己的玩家"""
    own = profile.self_rank(i)
    return frozenset(j for cls_ in profile.ranks[i - 1][:own] for j in cls_)


def is_strict(profile: PrefProfile) -> bool:
    """所有无差异类都是单点"""
    return all(len(cls_) == 1 for classes in profile.ranks for cls_ in classes)


def has_unacceptability(profile: PrefProfile) -> bool:
    """存在某玩家在自己所在类之后还有类"""
    return any(profile.self_rank(i) < len(profile.ranks[i - 1]) - 1 for i in range(1, profile.n + 1))


def favorite(profile: PrefProfile, i: PlayerId) -> Optional[PlayerId]:
    """唯一最喜欢的玩家；不喜欢任何人或并列时返回 None"""
    if profile.self_rank(i) == 0:
        return None
    top = profile.ranks[i - 1][0]
    return top[0] if len(top) == 1 else None


def unique_favorite(profile: PrefProfile) -> bool:
    """喜欢别人的玩家都有唯一的最爱"""
    for i in range(1, profile.n + 1):
        if profile.self_rank(i) > 0 and len(profile.ranks[i - 1][0]) != 1:
            return False
    return True


def likes_graph(profile: PrefProfile) -> Dict[PlayerId, FrozenSet[PlayerId]]:
    """玩家 -> 他喜欢的玩家集合"""
    return {i: likes(profile, i) for i in range(1, profile.n + 1)}
