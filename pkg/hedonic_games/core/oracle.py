"""
穷举 oracle
按限制增长串的字典序枚举全部划分，对每个划分运行稳定性检查；另含暴力 SAT
"""

import logging
from enum import Enum
from typing import Callable, Iterator, List, Optional, Tuple

from hedonic_games.config.settings import get_settings
from hedonic_games.core.cnf import CnfFormula, Valuation
from hedonic_games.core.model import GameInstance, Partition, PlayerId, Variant
from hedonic_games.core.stability import (
    DeviationKind,
    blocking_in_blocks,
    scan_blocks,
    unacceptable_in_blocks,
)
from hedonic_games.utils.exceptions import CapacityError

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[PlayerId, ...], ...]
Admissible = Callable[[List[PlayerId], PlayerId], bool]


class StabilityConcept(str, Enum):
    IR = "ir"
    NS = "ns"
    IS = "is"
    CIS = "cis"
    CIS_AND_IR = "cis-ir"
    CORE = "core"
    STRICT_CORE = "strict-core"


class SearchMode(str, Enum):
    ALL = "all"
    FIRST = "first"


def bell_number(n: int) -> int:
    """Bell 三角形递推"""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def _check_cap(n: int, cap: Optional[int]) -> None:
    cap = cap if cap is not None else get_settings().oracle.partition_cap
    if n > cap:
        raise CapacityError(f"玩家数 {n} 超过划分枚举上限 {cap}", cap=cap, requested=n)


def _rgs_blocks(n: int, admissible: Optional[Admissible] = None) -> Iterator[List[List[PlayerId]]]:
    """
    依次把玩家 k 放入已有块 0..b-1 或新块，得到限制增长串的字典序

    产出的是同一个可变列表，调用方必须立即复制。
    admissible(block, k) 为 False 时剪掉整棵子树。
    """
    blocks: List[List[PlayerId]] = []

    def place(k: int) -> Iterator[List[List[PlayerId]]]:
        if k > n:
            yield blocks
            return
        for index in range(len(blocks)):
            block = blocks[index]
            if admissible is not None and not admissible(block, k):
                continue
            block.append(k)
            yield from place(k + 1)
            block.pop()
        blocks.append([k])
        yield from place(k + 1)
        blocks.pop()

    yield from place(1)


def enumerate_partitions(n: int, cap: Optional[int] = None) -> Iterator[Partition]:
    """{1..n} 的全部划分，恰好 Bell(n) 个；超过上限时在调用处立即报错"""
    _check_cap(n, cap)
    return (Partition(n=n, blocks=tuple(tuple(block) for block in blocks)) for blocks in _rgs_blocks(n))


def _clique_filter(game: GameInstance) -> Admissible:
    """BB/W/WW 下 IR 等价于每个块内两两可接受"""
    profile = game.profile

    def admissible(block: List[PlayerId], k: PlayerId) -> bool:
        return all(profile.acceptable(j, k) and profile.acceptable(k, j) for j in block)

    return admissible


def _checker(game: GameInstance, concept: StabilityConcept) -> Callable[[Blocks], bool]:
    if concept == StabilityConcept.IR:
        return lambda blocks: unacceptable_in_blocks(game, blocks) is None
    if concept in (StabilityConcept.NS, StabilityConcept.IS, StabilityConcept.CIS):
        kind = DeviationKind(concept.value.upper())
        return lambda blocks: scan_blocks(game, blocks, kind) is None
    if concept == StabilityConcept.CIS_AND_IR:
        return lambda blocks: (
            unacceptable_in_blocks(game, blocks) is None
            and scan_blocks(game, blocks, DeviationKind.CIS) is None
        )
    strict = concept == StabilityConcept.STRICT_CORE
    return lambda blocks: blocking_in_blocks(game, blocks, strict) is None


def find_stable(
    game: GameInstance,
    concept: StabilityConcept,
    mode: SearchMode = SearchMode.ALL,
    cap: Optional[int] = None,
    ir_prefilter: Optional[bool] = None
) -> List[Partition]:
    """
    枚举所有划分并返回通过 concept 检查的那些（枚举顺序）

    除 CIS 外的各概念都蕴含 IR，开启 ir_prefilter 时先剪掉非 IR 划分，
    结果与不剪枝时相同。
    """
    _check_cap(game.n, cap)
    if ir_prefilter is None:
        ir_prefilter = get_settings().oracle.ir_prefilter
    prune = ir_prefilter and concept != StabilityConcept.CIS

    admissible = None
    post_ir = False
    if prune:
        if game.variant == Variant.B:
            # B 下 IR 不是块内两两条件，只能对完整划分过滤
            post_ir = True
        else:
            admissible = _clique_filter(game)

    check = _checker(game, concept)
    found: List[Partition] = []
    scanned = 0
    for raw in _rgs_blocks(game.n, admissible):
        scanned += 1
        blocks = tuple(tuple(block) for block in raw)
        if post_ir and unacceptable_in_blocks(game, blocks) is not None:
            continue
        if check(blocks):
            found.append(Partition(n=game.n, blocks=blocks))
            if mode == SearchMode.FIRST:
                break

    logger.info(
        f"oracle: {concept.value} 在 {scanned} 个候选划分中找到 {len(found)} 个"
        f"{' (IR 剪枝)' if prune else ''}"
    )
    return found


def brute_force_sat(formula: CnfFormula, cap: Optional[int] = None) -> Optional[Valuation]:
    """
    按掩码 0..2^m-1 的顺序尝试赋值，x_v 取掩码的第 v-1 位
    空公式返回全假赋值
    """
    cap = cap if cap is not None else get_settings().oracle.sat_cap
    if formula.m > cap:
        raise CapacityError(f"变量数 {formula.m} 超过暴力 SAT 上限 {cap}", cap=cap, requested=formula.m)

    for mask in range(1 << formula.m):
        if all(
            any(bool(mask >> (abs(lit) - 1) & 1) == (lit > 0) for lit in clause)
            for clause in formula.clauses
        ):
            return Valuation(values=tuple(bool(mask >> (v - 1) & 1) for v in range(1, formula.m + 1)))
    return None
