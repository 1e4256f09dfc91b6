"""
博弈业务服务层
把核心算法编排成 check / solve / enumerate / dynamics / reduce / generate 六个操作，
构造性输出在返回前一律经过对应的稳定性检查
"""

import logging
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from hedonic_games.config.settings import get_settings
from hedonic_games.core.algorithms import (
    cis_ir_dynamics,
    grand_coalition_if_ns,
    peel_b_game,
    solve_ns_b_unique_favorite,
    verify_cis_ir,
)
from hedonic_games.core.cnf import CnfFormula, Valuation
from hedonic_games.core.dynamics import DynamicsTrace, run_dynamics, verify_trace
from hedonic_games.core.generators import gen_extended_stalker, gen_random, gen_stalker
from hedonic_games.core.extensions import compare
from hedonic_games.core.model import GameInstance, Ordering, Partition, PlayerId, Variant, coalition
from hedonic_games.core.oracle import SearchMode, StabilityConcept, bell_number, find_stable
from hedonic_games.core.reductions import (
    ReductionKind,
    ReductionLayout,
    is_witness_from_valuation,
    ns_witness_from_valuation,
    reduce_sat_is_bb,
    reduce_sat_is_w,
    reduce_sat_ns,
)
from hedonic_games.core.stability import (
    DeviationKind,
    find_blocking_coalition,
    find_deviation,
    find_unacceptable_player,
    is_stable,
)
from hedonic_games.utils.exceptions import VerificationError

logger = logging.getLogger(__name__)


class SolveAlgorithm(str, Enum):
    CIS_IR = "cis-ir"
    IS_B = "is-b"
    NS_B_UF = "ns-b-uf"
    GRAND_NS = "grand-ns"


class GeneratorKind(str, Enum):
    STALKER = "stalker"
    EXTENDED_STALKER = "extended-stalker"
    RANDOM = "random"


class CheckReport(BaseModel):
    """稳定性检查报告"""
    concept: StabilityConcept
    stable: bool
    witness: Optional[str] = Field(None, description="不稳定时的偏离、阻塞联盟或不满意的玩家")

    def lines(self) -> List[str]:
        result = [f"stable: {'yes' if self.stable else 'no'}"]
        if self.witness:
            result.append(self.witness)
        return result


class SolveOutcome(BaseModel):
    """求解结果；found=False 表示已证明不存在（或大联盟不是 NS）"""
    algorithm: SolveAlgorithm
    found: bool
    partition: Optional[Partition] = None
    deviations: Optional[int] = Field(None, description="cis-ir 执行的偏离次数")
    removal_order: Optional[List[int]] = Field(None, description="is-b 的剥离顺序")


class EnumerationOutcome(BaseModel):
    concept: StabilityConcept
    mode: SearchMode
    partitions: List[Partition]
    total: int = Field(..., description="Bell(n)")

    def lines(self) -> List[str]:
        result = [f"{self.concept.value}: {p}" for p in self.partitions]
        result.append(f"count: {len(self.partitions)} / {self.total}")
        return result


class ReduceOutcome(BaseModel):
    kind: ReductionKind
    game: GameInstance
    layout: ReductionLayout
    witness: Optional[Partition] = None


class GameService:
    """博弈业务服务"""

    def __init__(self):
        self.settings = get_settings()

    def check(
        self,
        game: GameInstance,
        partition: Partition,
        concept: StabilityConcept,
        cap: Optional[int] = None
    ) -> CheckReport:
        """检查划分是否满足 concept，并给出第一个反例"""
        witness: Optional[str] = None
        if concept in (StabilityConcept.IR, StabilityConcept.CIS_AND_IR):
            unhappy = find_unacceptable_player(game, partition)
            if unhappy is not None:
                witness = f"player {unhappy} finds its coalition unacceptable"
        if witness is None and concept in (StabilityConcept.NS, StabilityConcept.IS, StabilityConcept.CIS, StabilityConcept.CIS_AND_IR):
            kind = DeviationKind.CIS if concept == StabilityConcept.CIS_AND_IR else DeviationKind(concept.value.upper())
            deviation = find_deviation(game, partition, kind)
            if deviation is not None:
                witness = f"deviation: {deviation.describe()}"
        if concept in (StabilityConcept.CORE, StabilityConcept.STRICT_CORE):
            strict = concept == StabilityConcept.STRICT_CORE
            blocking = find_blocking_coalition(game, partition, strict=strict, cap=cap)
            if blocking is not None:
                label = "weakly blocking" if strict else "blocking"
                witness = f"{label} coalition: {{" + " ".join(str(j) for j in blocking) + "}"

        logger.info(f"检查 {concept.value}: {partition} -> {'稳定' if witness is None else '不稳定'}")
        return CheckReport(concept=concept, stable=witness is None, witness=witness)

    def compare(self, game: GameInstance, i: PlayerId, S: List[PlayerId], T: List[PlayerId]) -> Ordering:
        """玩家 i 眼中 S 与 T 的比较结果"""
        result = compare(game, i, coalition(S), coalition(T))
        logger.debug(f"{game.variant.value} 比较: 玩家 {i}, {sorted(S)} vs {sorted(T)} -> {result.value}")
        return result

    def solve(self, game: GameInstance, algorithm: SolveAlgorithm) -> SolveOutcome:
        """运行构造性算法并自检"""
        if algorithm == SolveAlgorithm.CIS_IR:
            trace = cis_ir_dynamics(game)
            partition = trace.final
            self._verify(verify_cis_ir(game, partition), algorithm, partition)
            return SolveOutcome(algorithm=algorithm, found=True, partition=partition, deviations=len(trace.steps))

        if algorithm == SolveAlgorithm.IS_B:
            result = peel_b_game(game)
            self._verify(is_stable(game, result.partition, DeviationKind.IS), algorithm, result.partition)
            return SolveOutcome(
                algorithm=algorithm, found=True, partition=result.partition,
                removal_order=result.removal_order
            )

        if algorithm == SolveAlgorithm.NS_B_UF:
            answer = solve_ns_b_unique_favorite(game)
            if answer.exists:
                self._verify(is_stable(game, answer.partition, DeviationKind.NS), algorithm, answer.partition)
            return SolveOutcome(algorithm=algorithm, found=answer.exists, partition=answer.partition)

        partition = grand_coalition_if_ns(game)
        if partition is not None:
            self._verify(is_stable(game, partition, DeviationKind.NS), algorithm, partition)
        return SolveOutcome(algorithm=algorithm, found=partition is not None, partition=partition)

    @staticmethod
    def _verify(ok: bool, algorithm: SolveAlgorithm, partition: Partition) -> None:
        if not ok:
            logger.error(f"{algorithm.value} 的输出 {partition} 未通过自检")
            raise VerificationError(
                f"{algorithm.value} 的输出未通过稳定性检查",
                details={"algorithm": algorithm.value, "partition": str(partition)}
            )

    def enumerate(
        self,
        game: GameInstance,
        concept: StabilityConcept,
        mode: SearchMode = SearchMode.ALL,
        cap: Optional[int] = None
    ) -> EnumerationOutcome:
        partitions = find_stable(game, concept, mode, cap=cap)
        return EnumerationOutcome(concept=concept, mode=mode, partitions=partitions, total=bell_number(game.n))

    def dynamics(
        self,
        game: GameInstance,
        start: Partition,
        kind: DeviationKind,
        max_steps: Optional[int] = None
    ) -> DynamicsTrace:
        trace = run_dynamics(game, start, kind, max_steps=max_steps)
        if not verify_trace(game, trace):
            raise VerificationError("动力学轨迹重放失败", details={"kind": kind.value})
        return trace

    def reduce(
        self,
        formula: CnfFormula,
        kind: ReductionKind,
        valuation: Optional[Valuation] = None
    ) -> ReduceOutcome:
        """编译构件博弈；给出赋值时构造并检查见证划分"""
        if kind == ReductionKind.IS_BB:
            game, layout = reduce_sat_is_bb(formula)
        elif kind == ReductionKind.IS_W:
            game, layout = reduce_sat_is_w(formula)
        else:
            game, layout = reduce_sat_ns(formula, kind.variant)

        witness = None
        if valuation is not None:
            if kind.is_gadget:
                witness = is_witness_from_valuation(formula, layout, valuation)
                required = [DeviationKind.IS] + ([DeviationKind.NS] if kind == ReductionKind.IS_BB else [])
            else:
                witness = ns_witness_from_valuation(formula, layout, valuation)
                required = [DeviationKind.NS]
            for deviation_kind in required:
                if not is_stable(game, witness, deviation_kind):
                    raise VerificationError(
                        f"见证划分未通过 {deviation_kind.value} 检查",
                        details={"kind": kind.value, "witness": str(witness)}
                    )
            logger.info(f"见证划分已验证: {witness}")
        return ReduceOutcome(kind=kind, game=game, layout=layout, witness=witness)

    def generate(
        self,
        kind: GeneratorKind,
        variant: Variant = Variant.BB,
        n: Optional[int] = None,
        tie_probability: Optional[float] = None,
        unacceptability_probability: Optional[float] = None,
        seed: Optional[int] = None,
        unique_favorite: bool = False
    ) -> GameInstance:
        if kind == GeneratorKind.STALKER:
            return gen_stalker(variant)
        if kind == GeneratorKind.EXTENDED_STALKER:
            return gen_extended_stalker(variant)
        return gen_random(
            n if n is not None else 6,
            variant=variant,
            tie_probability=tie_probability,
            unacceptability_probability=unacceptability_probability,
            seed=seed,
            unique_favorite=unique_favorite,
        )
