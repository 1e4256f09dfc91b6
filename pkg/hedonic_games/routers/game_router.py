"""
博弈 API 路由
"""

import logging
from fastapi import APIRouter, Depends

from hedonic_games.core.cnf import Valuation, parse_dimacs
from hedonic_games.core.container import get_game_service
from hedonic_games.core.formats import format_game, parse_game, parse_partition
from hedonic_games.core.model import Partition
from hedonic_games.schemas.game_schemas import (
    CheckRequest,
    DynamicsRequest,
    EnumerateRequest,
    GameResponse,
    GenerateRequest,
    ReduceRequest,
    SolveRequest,
)
from hedonic_games.services.game_service import GameService

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/games", tags=["Games"])


@router.post("/check", response_model=GameResponse, summary="稳定性检查")
async def check(request: CheckRequest, service: GameService = Depends(get_game_service)):
    game = parse_game(request.game, request.variant)
    partition = parse_partition(request.partition, game.n)
    report = service.check(game, partition, request.concept, cap=request.cap)
    return GameResponse(success=True, data=report.model_dump(mode="json"))


@router.post("/solve", response_model=GameResponse, summary="构造性求解")
async def solve(request: SolveRequest, service: GameService = Depends(get_game_service)):
    game = parse_game(request.game, request.variant)
    outcome = service.solve(game, request.algorithm)
    data = outcome.model_dump(mode="json", exclude={"partition"})
    data["partition"] = str(outcome.partition) if outcome.partition else None
    return GameResponse(success=True, data=data)


@router.post("/enumerate", response_model=GameResponse, summary="穷举稳定划分")
async def enumerate_stable(request: EnumerateRequest, service: GameService = Depends(get_game_service)):
    game = parse_game(request.game, request.variant)
    outcome = service.enumerate(game, request.concept, request.mode, cap=request.cap)
    return GameResponse(success=True, data={
        "concept": outcome.concept.value,
        "mode": outcome.mode.value,
        "partitions": [str(p) for p in outcome.partitions],
        "count": len(outcome.partitions),
        "total": outcome.total,
    })


@router.post("/dynamics", response_model=GameResponse, summary="偏离动力学")
async def dynamics(request: DynamicsRequest, service: GameService = Depends(get_game_service)):
    """
    从起始划分运行确定性偏离动力学
    """
    game = parse_game(request.game, request.variant)
    start = parse_partition(request.start, game.n) if request.start else Partition.singletons(game.n)
    trace = service.dynamics(game, start, request.kind, max_steps=request.max_steps)
    return GameResponse(success=True, data={
        "kind": trace.kind.value,
        "terminal": trace.terminal.value,
        "cycle_index": trace.cycle_index,
        "final": str(trace.final),
        "lines": trace.lines(),
    })


@router.post("/reduce", response_model=GameResponse, summary="SAT 归约")
async def reduce(request: ReduceRequest, service: GameService = Depends(get_game_service)):
    formula = parse_dimacs(request.cnf)
    valuation = Valuation.parse(request.witness, formula.m) if request.witness is not None else None
    outcome = service.reduce(formula, request.reduction, valuation)
    return GameResponse(success=True, data={
        "kind": outcome.kind.value,
        "n": outcome.game.n,
        "game": format_game(outcome.game),
        "layout": outcome.layout.lines(),
        "witness": str(outcome.witness) if outcome.witness else None,
    })


@router.post("/generate", response_model=GameResponse, summary="生成实例")
async def generate(request: GenerateRequest, service: GameService = Depends(get_game_service)):
    game = service.generate(
        request.kind,
        variant=request.variant,
        n=request.n,
        tie_probability=request.tie_probability,
        unacceptability_probability=request.unacceptability_probability,
        seed=request.seed,
        unique_favorite=request.unique_favorite,
    )
    return GameResponse(success=True, data={"n": game.n, "game": format_game(game)})
