"""
偏离动力学
从给定划分出发反复执行确定性偏离，检测稳定、循环或截断，并输出可重放的轨迹
"""

import logging
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from hedonic_games.config.settings import get_settings
from hedonic_games.core.model import GameInstance, Partition
from hedonic_games.core.stability import Deviation, DeviationKind, apply_deviation, find_deviation
from hedonic_games.utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

SUPPORTED_RULES = ("smallest-mover-first",)


class TerminalKind(str, Enum):
    STABILIZED = "stabilized"
    CYCLE = "cycle"
    TRUNCATED = "truncated"


class TraceStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    before: Partition
    deviation: Deviation


class DynamicsTrace(BaseModel):
    """一次动力学运行的完整轨迹"""

    model_config = ConfigDict(frozen=True)

    kind: DeviationKind
    start: Partition
    steps: List[TraceStep] = Field(default_factory=list)
    terminal: TerminalKind
    final: Partition = Field(..., description="最后到达的划分")
    cycle_index: Optional[int] = Field(None, description="循环时首次重复出现的步号")
    max_steps: int

    def visited(self) -> List[Partition]:
        """依次访问过的划分（含最后一个）"""
        return [step.before for step in self.steps] + [self.final]

    def lines(self) -> List[str]:
        result = [f"step {k}: {step.deviation.describe()}" for k, step in enumerate(self.steps)]
        if self.terminal == TerminalKind.CYCLE:
            result.append(f"cycle at {self.cycle_index}")
        else:
            result.append(self.terminal.value)
        return result


def run_dynamics(
    game: GameInstance,
    start: Partition,
    kind: DeviationKind,
    max_steps: Optional[int] = None,
    rule: Optional[str] = None
) -> DynamicsTrace:
    """
    反复执行 find_deviation 给出的偏离

    find_deviation 返回 None 时稳定；回到访问过的划分时报告循环；
    步数达到 max_steps 且仍有偏离时截断。
    """
    settings = get_settings().dynamics
    max_steps = max_steps if max_steps is not None else settings.default_max_steps
    rule = rule or settings.rule
    if max_steps < 1:
        raise InvalidInputError(f"max_steps 必须 ≥ 1，当前为 {max_steps}")
    if rule not in SUPPORTED_RULES:
        raise InvalidInputError(f"不支持的偏离选择规则: {rule}", details={"supported": list(SUPPORTED_RULES)})
    if start.n != game.n:
        raise InvalidInputError(f"起始划分的玩家数 {start.n} 与博弈玩家数 {game.n} 不一致")

    visited: Dict[Partition, int] = {start: 0}
    steps: List[TraceStep] = []
    current = start

    while True:
        deviation = find_deviation(game, current, kind)
        if deviation is None:
            logger.info(f"{kind.value} 动力学在 {len(steps)} 步后稳定")
            return DynamicsTrace(
                kind=kind, start=start, steps=steps, terminal=TerminalKind.STABILIZED,
                final=current, max_steps=max_steps
            )
        if len(steps) == max_steps:
            logger.info(f"{kind.value} 动力学达到步数上限 {max_steps}，截断")
            return DynamicsTrace(
                kind=kind, start=start, steps=steps, terminal=TerminalKind.TRUNCATED,
                final=current, max_steps=max_steps
            )

        nxt = apply_deviation(current, deviation)
        steps.append(TraceStep(before=current, deviation=deviation))
        logger.debug(f"step {len(steps) - 1}: {deviation.describe()} => {nxt}")

        if nxt in visited:
            logger.info(f"{kind.value} 动力学出现循环，回到第 {visited[nxt]} 步的划分")
            return DynamicsTrace(
                kind=kind, start=start, steps=steps, terminal=TerminalKind.CYCLE,
                final=nxt, cycle_index=visited[nxt], max_steps=max_steps
            )
        visited[nxt] = len(steps)
        current = nxt


def verify_trace(game: GameInstance, trace: DynamicsTrace) -> bool:
    """逐步重放轨迹，确认每一步都是确定性扫描给出的偏离"""
    current = trace.start
    for step in trace.steps:
        if step.before != current:
            return False
        if find_deviation(game, current, trace.kind) != step.deviation:
            return False
        current = apply_deviation(current, step.deviation)
    if current != trace.final:
        return False
    if trace.terminal == TerminalKind.STABILIZED:
        return find_deviation(game, current, trace.kind) is None
    if trace.terminal == TerminalKind.CYCLE:
        return trace.cycle_index is not None and trace.visited()[trace.cycle_index] == current
    return len(trace.steps) == trace.max_steps
