"""
SAT 归约构件
把 CNF 公式编译为三类构件博弈，由满足赋值构造见证划分，并从稳定划分中反解赋值

编号约定：
- NS 构件：one=1, zero=2, 然后 p1, ~p1, ..., pm, ~pm，再是子句玩家 X1..Xk
- IS 构件：每个子句 c 的 1^Xc..5^Xc 为 5(c-1)+1..5c，然后 0_p1..0_pm，
  最后是文字出现玩家，按子句、再按子句内文字的顺序（同一子句内重复文字只算一次）
"""

import logging
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hedonic_games.core.cnf import CnfFormula, Valuation
from hedonic_games.core.model import GameInstance, Partition, PlayerId, PrefProfile, Variant
from hedonic_games.core.stability import DeviationKind, find_unacceptable_player, is_stable
from hedonic_games.utils.exceptions import InvalidInputError, PreconditionError

logger = logging.getLogger(__name__)


class ReductionKind(str, Enum):
    NS_BB = "ns-bb"
    NS_W = "ns-w"
    IS_BB = "is-bb"
    IS_W = "is-w"

    @property
    def variant(self) -> Variant:
        return Variant.BB if self in (ReductionKind.NS_BB, ReductionKind.IS_BB) else Variant.W

    @property
    def is_gadget(self) -> bool:
        """IS 构件（五人子句组 + 0_p + 出现玩家）"""
        return self in (ReductionKind.IS_BB, ReductionKind.IS_W)


class Occurrence(BaseModel):
    """子句 clause 中文字 literal 的一个出现玩家"""

    model_config = ConfigDict(frozen=True)

    clause: int
    literal: int
    player: PlayerId


class ReductionLayout(BaseModel):
    """构件玩家的名字与编号对照，以及导出的集合"""

    model_config = ConfigDict(frozen=True)

    kind: ReductionKind
    formula: CnfFormula
    names: Dict[str, PlayerId] = Field(..., description="名字 -> 编号")
    occurrences: Tuple[Occurrence, ...] = Field(default_factory=tuple, description="IS 构件的文字出现玩家")

    @property
    def n(self) -> int:
        return len(self.names)

    def id_of(self, name: str) -> PlayerId:
        if name not in self.names:
            raise InvalidInputError(f"构件中没有名为 `{name}` 的玩家")
        return self.names[name]

    def name_of(self, player: PlayerId) -> str:
        for name, value in self.names.items():
            if value == player:
                return name
        raise InvalidInputError(f"构件中没有编号 {player}")

    def occurrence_set(self, literal: int) -> List[PlayerId]:
        """C_p（literal>0）或 C_¬p（literal<0）"""
        return [o.player for o in self.occurrences if o.literal == literal]

    def clause_occurrences(self, clause: int) -> List[PlayerId]:
        """L^X"""
        return [o.player for o in self.occurrences if o.clause == clause]

    def lines(self) -> List[str]:
        ordered = sorted(self.names.items(), key=lambda item: item[1])
        return [f"# name {name} -> id {player}" for name, player in ordered]


def literal_name(literal: int) -> str:
    return f"p{literal}" if literal > 0 else f"~p{-literal}"


# ---------------------------------------------------------------------------
# NS 构件
# ---------------------------------------------------------------------------

ONE = 1
ZERO = 2


def _ns_literal_id(literal: int) -> PlayerId:
    v = abs(literal)
    return 3 + 2 * (v - 1) + (0 if literal > 0 else 1)


def _ns_clause_id(formula: CnfFormula, clause: int) -> PlayerId:
    return 2 + 2 * formula.m + clause


def reduce_sat_ns(formula: CnfFormula, variant: Variant = Variant.BB) -> Tuple[GameInstance, ReductionLayout]:
    """NS 存在性构件：公式可满足当且仅当博弈有 NS 划分"""
    if variant not in (Variant.BB, Variant.W):
        raise PreconditionError(
            f"NS 归约只支持 BB 与 W，当前为 {variant.value}",
            details={"assumption": "variant", "variant": variant.value}
        )
    m, k = formula.m, formula.k
    names: Dict[str, PlayerId] = {"one": ONE, "zero": ZERO}
    literal_players: List[PlayerId] = []
    for v in range(1, m + 1):
        for literal in (v, -v):
            names[literal_name(literal)] = _ns_literal_id(literal)
            literal_players.append(_ns_literal_id(literal))
    clause_players = [_ns_clause_id(formula, c) for c in range(1, k + 1)]
    for c, player in enumerate(clause_players, start=1):
        names[f"X{c}"] = player

    ranks: Dict[PlayerId, List[List[PlayerId]]] = {}
    for v in range(1, m + 1):
        for literal in (v, -v):
            player = _ns_literal_id(literal)
            complement = _ns_literal_id(-literal)
            liked = [ONE, ZERO] + [q for q in literal_players if q != complement]
            ranks[player] = [liked, [complement] + clause_players]

    for c, clause in enumerate(formula.clauses, start=1):
        inside = {_ns_literal_id(lit) for lit in clause}
        outside = [q for q in literal_players if q not in inside]
        ranks[_ns_clause_id(formula, c)] = [
            [ONE] + outside,
            list(clause_players),
            [ZERO] + sorted(inside),
        ]

    ranks[ZERO] = [literal_players + [ZERO], [ONE] + clause_players]
    ranks[ONE] = [literal_players + [ONE], [ZERO] + clause_players]

    n = k + 2 * m + 2
    profile = PrefProfile.from_lists([ranks[i] for i in range(1, n + 1)])
    kind = ReductionKind.NS_BB if variant == Variant.BB else ReductionKind.NS_W
    layout = ReductionLayout(kind=kind, formula=formula, names=names)
    logger.info(f"NS 构件: m={m}, k={k}, n={n}, variant={variant.value}")
    return GameInstance.build(profile, variant), layout


def _require_satisfying(formula: CnfFormula, valuation: Valuation) -> None:
    if valuation.m != formula.m or not formula.evaluate(valuation):
        raise PreconditionError(
            f"赋值 {valuation} 不满足公式",
            details={"assumption": "satisfying-valuation"}
        )


def _require_kind(layout: ReductionLayout, gadget: bool) -> None:
    if layout.kind.is_gadget != gadget:
        raise InvalidInputError(f"构件类型 {layout.kind.value} 与所调用的操作不匹配")


def ns_witness_from_valuation(formula: CnfFormula, layout: ReductionLayout, valuation: Valuation) -> Partition:
    """{one + 真文字}, {zero + 假文字}, {全部子句玩家}"""
    _require_kind(layout, gadget=False)
    _require_satisfying(formula, valuation)
    true_side = [ONE]
    false_side = [ZERO]
    for v in range(1, formula.m + 1):
        literal = v if valuation.value(v) else -v
        true_side.append(_ns_literal_id(literal))
        false_side.append(_ns_literal_id(-literal))
    blocks = [true_side, false_side]
    if formula.k:
        blocks.append([_ns_clause_id(formula, c) for c in range(1, formula.k + 1)])
    return Partition.from_blocks(layout.n, blocks)


def rebuild_game(layout: ReductionLayout) -> GameInstance:
    """按构件类型重新生成博弈"""
    if layout.kind.is_gadget:
        if layout.kind == ReductionKind.IS_BB:
            return reduce_sat_is_bb(layout.formula)[0]
        return reduce_sat_is_w(layout.formula)[0]
    return reduce_sat_ns(layout.formula, layout.kind.variant)[0]


def valuation_from_ns_partition(formula: CnfFormula, layout: ReductionLayout, partition: Partition) -> Valuation:
    """与 one 同块的正文字为真，其余变量为假"""
    _require_kind(layout, gadget=False)
    game = rebuild_game(layout)
    unhappy = find_unacceptable_player(game, partition)
    if unhappy is not None:
        raise PreconditionError(
            f"划分不是 IR 的: 玩家 {layout.name_of(unhappy)} 不接受所在联盟",
            details={"assumption": "individually-rational", "player": unhappy}
        )
    values = tuple(partition.together(ONE, _ns_literal_id(v)) for v in range(1, formula.m + 1))
    return Valuation(values=values)


# ---------------------------------------------------------------------------
# IS 构件
# ---------------------------------------------------------------------------

def _group_id(clause: int, member: int) -> PlayerId:
    """member^X_clause，member ∈ 1..5"""
    return 5 * (clause - 1) + member


def _zero_id(formula: CnfFormula, v: int) -> PlayerId:
    return 5 * formula.k + v


def _layout_is(formula: CnfFormula, kind: ReductionKind) -> ReductionLayout:
    if formula.k == 0:
        raise PreconditionError("IS 构件需要至少一个子句", details={"assumption": "non-empty-formula"})
    names: Dict[str, PlayerId] = {}
    for c in range(1, formula.k + 1):
        for member in range(1, 6):
            names[f"{member}^X{c}"] = _group_id(c, member)
    for v in range(1, formula.m + 1):
        names[f"0_p{v}"] = _zero_id(formula, v)
    occurrences = []
    next_id = 5 * formula.k + formula.m + 1
    for c, clause in enumerate(formula.clauses, start=1):
        seen = set()
        for literal in clause:
            if literal in seen:
                continue
            seen.add(literal)
            names[f"{literal_name(literal)}^X{c}"] = next_id
            occurrences.append(Occurrence(clause=c, literal=literal, player=next_id))
            next_id += 1
    return ReductionLayout(kind=kind, formula=formula, names=names, occurrences=tuple(occurrences))


def _with_rest(n: int, classes: List[List[PlayerId]]) -> List[List[PlayerId]]:
    """未列出的玩家按编号升序作为单点不可接受类追加在末尾"""
    listed = {j for cls_ in classes for j in cls_}
    return [cls_ for cls_ in classes if cls_] + [[j] for j in range(1, n + 1) if j not in listed]


def _singletons(players: Sequence[PlayerId]) -> List[List[PlayerId]]:
    return [[j] for j in sorted(players)]


def _is_gadget_ranks(formula: CnfFormula, layout: ReductionLayout) -> Dict[PlayerId, List[List[PlayerId]]]:
    """严格 BB 版本的全部偏好"""
    n = layout.n
    every_occurrence = [o.player for o in layout.occurrences]
    ranks: Dict[PlayerId, List[List[PlayerId]]] = {}

    for c in range(1, formula.k + 1):
        g = [None] + [_group_id(c, member) for member in range(1, 6)]
        ranks[g[1]] = _with_rest(n, [[g[2]]] + _singletons(layout.clause_occurrences(c)) + [[g[5]], [g[1]]])
        ranks[g[2]] = _with_rest(n, [[g[3]], [g[1]], [g[2]]])
        ranks[g[3]] = _with_rest(n, [[g[4]], [g[2]], [g[3]]])
        ranks[g[4]] = _with_rest(n, [[g[5]], [g[3]], [g[4]]])
        ranks[g[5]] = _with_rest(n, [[g[1]], [g[4]], [g[5]]])

    for v in range(1, formula.m + 1):
        both = layout.occurrence_set(v) + layout.occurrence_set(-v)
        zero = _zero_id(formula, v)
        ranks[zero] = _with_rest(n, _singletons(both) + [[zero]])

    for o in layout.occurrences:
        v = abs(o.literal)
        same = [q for q in layout.occurrence_set(o.literal) if q != o.player]
        both = set(layout.occurrence_set(v) + layout.occurrence_set(-v))
        others = [q for q in every_occurrence if q not in both]
        ranks[o.player] = _with_rest(
            n,
            [[_zero_id(formula, v)]] + _singletons(same) + [[_group_id(o.clause, 1)]] + _singletons(others) + [[o.player]]
        )
    return ranks


def _build(layout: ReductionLayout, ranks: Dict[PlayerId, List[List[PlayerId]]], variant: Variant) -> GameInstance:
    profile = PrefProfile.from_lists([ranks[i] for i in range(1, layout.n + 1)])
    return GameInstance.build(profile, variant)


def reduce_sat_is_bb(formula: CnfFormula) -> Tuple[GameInstance, ReductionLayout]:
    """严格偏好 BB 博弈的 IS（亦即 NS）构件"""
    formula.check_gadget_assumptions()
    layout = _layout_is(formula, ReductionKind.IS_BB)
    game = _build(layout, _is_gadget_ranks(formula, layout), Variant.BB)
    logger.info(f"IS 构件 (BB): m={formula.m}, k={formula.k}, n={layout.n}")
    return game, layout


def reduce_sat_is_w(formula: CnfFormula) -> Tuple[GameInstance, ReductionLayout]:
    """W 版本：出现玩家与 0_p 的偏好带并列，其余玩家与 BB 版本相同"""
    formula.check_gadget_assumptions()
    layout = _layout_is(formula, ReductionKind.IS_W)
    ranks = _is_gadget_ranks(formula, layout)
    n = layout.n
    every_occurrence = [o.player for o in layout.occurrences]

    for v in range(1, formula.m + 1):
        zero = _zero_id(formula, v)
        both = layout.occurrence_set(v) + layout.occurrence_set(-v)
        ranks[zero] = _with_rest(n, [sorted(both + [zero])])

    for o in layout.occurrences:
        v = abs(o.literal)
        same = [q for q in layout.occurrence_set(o.literal) if q != o.player]
        both = set(layout.occurrence_set(v) + layout.occurrence_set(-v))
        others = [q for q in every_occurrence if q not in both]
        ranks[o.player] = _with_rest(n, [
            sorted([_zero_id(formula, v)] + same),
            sorted([_group_id(o.clause, 1)] + others),
            [o.player],
        ])

    game = _build(layout, ranks, Variant.W)
    logger.info(f"IS 构件 (W): m={formula.m}, k={formula.k}, n={layout.n}")
    return game, layout


def is_witness_from_valuation(formula: CnfFormula, layout: ReductionLayout, valuation: Valuation) -> Partition:
    """
    {2^X,3^X}, {4^X,5^X}, {1^X + X 中为真的出现玩家}，
    {0_p + p 为假一侧的全部出现玩家}
    """
    _require_kind(layout, gadget=True)
    _require_satisfying(formula, valuation)
    blocks: List[List[PlayerId]] = []
    for c in range(1, formula.k + 1):
        blocks.append([_group_id(c, 2), _group_id(c, 3)])
        blocks.append([_group_id(c, 4), _group_id(c, 5)])
        true_here = [o.player for o in layout.occurrences if o.clause == c and valuation.literal(o.literal)]
        blocks.append([_group_id(c, 1)] + true_here)
    for v in range(1, formula.m + 1):
        false_literal = -v if valuation.value(v) else v
        blocks.append([_zero_id(formula, v)] + layout.occurrence_set(false_literal))
    return Partition.from_blocks(layout.n, blocks)


def valuation_from_is_partition(formula: CnfFormula, layout: ReductionLayout, partition: Partition) -> Valuation:
    """p 为真当且仅当某个正出现玩家 p^X 与 1^X 同块"""
    _require_kind(layout, gadget=True)
    game = rebuild_game(layout)
    if not is_stable(game, partition, DeviationKind.IS):
        raise PreconditionError("划分不是 IS 的", details={"assumption": "individually-stable"})
    values = []
    for v in range(1, formula.m + 1):
        values.append(any(
            partition.together(o.player, _group_id(o.clause, 1))
            for o in layout.occurrences if o.literal == v
        ))
    return Valuation(values=tuple(values))
