"""
博弈接口的数据模式定义
请求体直接携带与命令行相同的文本格式
"""

from typing import Any, Dict, Optional
from pydantic import BaseModel, Field

from hedonic_games.core.model import Variant
from hedonic_games.core.oracle import SearchMode, StabilityConcept
from hedonic_games.core.reductions import ReductionKind
from hedonic_games.core.stability import DeviationKind
from hedonic_games.services.game_service import GeneratorKind, SolveAlgorithm


class GameRequest(BaseModel):
    """携带博弈文本的请求基类"""
    game: str = Field(..., description="博弈文件内容")
    variant: Optional[Variant] = Field(None, description="覆盖文件中的扩展方式")


class CheckRequest(GameRequest):
    """稳定性检查请求"""
    partition: str = Field(..., description="划分文本，如 {1 2} {3}")
    concept: StabilityConcept = Field(StabilityConcept.NS, description="稳定性概念")
    cap: Optional[int] = Field(None, ge=1, description="核心检查的玩家数上限")


class SolveRequest(GameRequest):
    """构造性求解请求"""
    algorithm: SolveAlgorithm = Field(..., description="算法")


class EnumerateRequest(GameRequest):
    """穷举请求"""
    concept: StabilityConcept = Field(StabilityConcept.NS, description="稳定性概念")
    mode: SearchMode = Field(SearchMode.ALL, description="全部或只要第一个")
    cap: Optional[int] = Field(None, ge=1, description="划分枚举的玩家数上限")


class DynamicsRequest(GameRequest):
    """动力学请求"""
    start: Optional[str] = Field(None, description="起始划分，缺省为全单点")
    kind: DeviationKind = Field(DeviationKind.IS, description="偏离类型")
    max_steps: Optional[int] = Field(None, ge=1, description="最大步数")


class ReduceRequest(BaseModel):
    """归约请求"""
    cnf: str = Field(..., description="DIMACS CNF 内容")
    reduction: ReductionKind = Field(..., description="构件类型")
    witness: Optional[str] = Field(None, description="01 赋值串，x1 在前")


class GenerateRequest(BaseModel):
    """实例生成请求"""
    kind: GeneratorKind = Field(..., description="实例类型")
    variant: Variant = Field(Variant.BB, description="扩展方式")
    n: Optional[int] = Field(None, ge=1, description="随机实例的玩家数")
    tie_probability: Optional[float] = Field(None, ge=0.0, le=1.0)
    unacceptability_probability: Optional[float] = Field(None, ge=0.0, le=1.0)
    seed: Optional[int] = Field(None, description="随机种子")
    unique_favorite: bool = Field(False, description="强制唯一最爱")


class GameResponse(BaseModel):
    """统一响应"""
    success: bool
    data: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
