"""
构造性算法
CIS+IR 动力学、大联盟捷径、B 博弈唯一最爱 NS 求解、不可接受玩家折叠、
B 博弈线性时间 IS 构造
"""

import heapq
import logging
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from hedonic_games.core.dynamics import DynamicsTrace, TerminalKind, run_dynamics
from hedonic_games.core.model import (
    GameInstance,
    Partition,
    PlayerId,
    PrefProfile,
    Variant,
    favorite,
    has_unacceptability,
    likes,
    likes_graph,
    unique_favorite,
)
from hedonic_games.core.stability import DeviationKind, is_ir, is_stable
from hedonic_games.utils.exceptions import PreconditionError, VerificationError

logger = logging.getLogger(__name__)


class NsAnswer(BaseModel):
    """NS 划分存在性的回答；存在时带上划分"""

    model_config = ConfigDict(frozen=True)

    exists: bool
    partition: Optional[Partition] = None

    @classmethod
    def found(cls, partition: Partition) -> "NsAnswer":
        return cls(exists=True, partition=partition)

    @classmethod
    def not_exists(cls) -> "NsAnswer":
        return cls(exists=False)


class PeelingResult(BaseModel):
    """B 博弈剥离过程的结果"""

    model_config = ConfigDict(frozen=True)

    partition: Partition
    removal_order: List[PlayerId] = Field(..., description="进入 B 的顺序，初始集合按编号升序在前")
    initial: List[PlayerId] = Field(..., description="一开始就不喜欢任何人的玩家")


def _require_variant(game: GameInstance, variant: Variant, what: str) -> None:
    if game.variant != variant:
        raise PreconditionError(
            f"{what} 只适用于 {variant.value} 博弈，当前为 {game.variant.value}",
            details={"variant": game.variant.value, "required": variant.value}
        )


def deviation_bound(game: GameInstance) -> int:
    """从单点划分出发的 CIS 偏离次数上界"""
    n = game.n
    if game.variant == Variant.B:
        return n * n * (n - 1)
    return n * (n - 1)


def cis_ir_dynamics(game: GameInstance) -> DynamicsTrace:
    """从全单点划分出发运行 CIS 动力学，返回完整轨迹；超出上界时报错"""
    bound = deviation_bound(game)
    trace = run_dynamics(game, Partition.singletons(game.n), DeviationKind.CIS, max_steps=bound + 1)
    if trace.terminal != TerminalKind.STABILIZED or len(trace.steps) > bound:
        raise VerificationError(
            f"CIS 动力学未在 {bound} 步内稳定 (终止: {trace.terminal.value}, 步数: {len(trace.steps)})",
            details={"bound": bound, "steps": len(trace.steps)}
        )
    logger.info(f"CIS+IR 划分: {trace.final} ({len(trace.steps)} 次偏离, 上界 {bound})")
    return trace


def compute_cis_ir(game: GameInstance) -> Partition:
    """计算一个同时满足 CIS 与 IR 的划分"""
    return cis_ir_dynamics(game).final


def grand_coalition_if_ns(game: GameInstance) -> Optional[Partition]:
    """大联盟 NS 时返回它，否则返回 None"""
    grand = Partition.grand(game.n)
    if game.n == 1:
        return grand
    profile = game.profile
    if game.variant != Variant.B and not has_unacceptability(profile):
        return grand
    if game.variant == Variant.B and all(likes(profile, i) for i in game.players):
        return grand
    if is_stable(game, grand, DeviationKind.NS):
        return grand
    return None


def _no_likes(profile: PrefProfile) -> List[PlayerId]:
    return [i for i in range(1, profile.n + 1) if profile.self_rank(i) == 0]


def _core_and_singletons(n: int, outside: List[PlayerId]) -> Partition:
    """{N\\A} ∪ A 中的单点；N\\A 为空时不出现"""
    excluded = set(outside)
    rest = [i for i in range(1, n + 1) if i not in excluded]
    blocks = [rest] if rest else []
    blocks.extend([i] for i in outside)
    return Partition.from_blocks(n, blocks)


def solve_ns_b_unique_favorite(game: GameInstance) -> NsAnswer:
    """B 博弈在唯一最爱条件下的线性时间 NS 判定"""
    _require_variant(game, Variant.B, "唯一最爱 NS 求解")
    profile = game.profile
    if not unique_favorite(profile):
        raise PreconditionError(
            "存在喜欢别人却没有唯一最爱的玩家",
            details={"assumption": "unique-favorite"}
        )

    outside = _no_likes(profile)
    if not outside:
        return NsAnswer.found(Partition.grand(game.n))
    if len(outside) == game.n:
        return NsAnswer.found(Partition.singletons(game.n))

    in_a = set(outside)
    for j in game.players:
        if j in in_a:
            continue
        if favorite(profile, j) in in_a:
            logger.info(f"玩家 {j} 的最爱 {favorite(profile, j)} 不喜欢任何人，不存在 NS 划分")
            return NsAnswer.not_exists()
    return NsAnswer.found(_core_and_singletons(game.n, outside))


def collapse_unacceptable(profile: PrefProfile) -> PrefProfile:
    """把自己所在类之后的类全部并入自己所在类"""
    ranks = []
    for i in range(1, profile.n + 1):
        classes = profile.classes(i)
        own = profile.self_rank(i)
        merged = [j for cls_ in classes[own:] for j in cls_]
        ranks.append(list(classes[:own]) + [merged])
    return PrefProfile.from_lists(ranks)


def peel_b_game(game: GameInstance) -> PeelingResult:
    """
    迭代剥离：B 从不喜欢任何人的玩家开始，
    反复把在 N\\B 中已没有喜欢对象的玩家移入 B（同时可选时编号小者优先）
    """
    _require_variant(game, Variant.B, "B 博弈 IS 构造")
    profile = game.profile
    n = game.n

    remaining = [0] * (n + 1)
    liked_by: List[List[PlayerId]] = [[] for _ in range(n + 1)]
    for i, liked in likes_graph(profile).items():
        remaining[i] = len(liked)
        for j in liked:
            liked_by[j].append(i)

    initial = _no_likes(profile)
    order: List[PlayerId] = []
    eligible: List[PlayerId] = []

    def remove(j: PlayerId) -> None:
        order.append(j)
        for i in liked_by[j]:
            remaining[i] -= 1
            if remaining[i] == 0:
                heapq.heappush(eligible, i)

    for j in initial:
        remove(j)
    while eligible:
        j = heapq.heappop(eligible)
        logger.debug(f"剥离玩家 {j}")
        remove(j)

    partition = _core_and_singletons(n, order)
    logger.info(f"B 博弈剥离完成: 初始 {len(initial)} 人, 共移出 {len(order)} 人, 结果 {partition}")
    return PeelingResult(partition=partition, removal_order=order, initial=initial)


def compute_is_b(game: GameInstance) -> Partition:
    """B 博弈的 IS 划分"""
    return peel_b_game(game).partition


def verify_cis_ir(game: GameInstance, partition: Partition) -> bool:
    return is_ir(game, partition) and is_stable(game, partition, DeviationKind.CIS)
