"""
健康检查API
"""

import logging
import time
from datetime import datetime
from typing import Any, Dict

from fastapi import APIRouter, Depends

from hedonic_games.config.settings import AppSettings, get_settings
from hedonic_games.core.container import get_game_service
from hedonic_games.core.generators import gen_stalker
from hedonic_games.core.oracle import StabilityConcept
from hedonic_games.services.game_service import GameService

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/health", tags=["Health"])


@router.get("/", summary="基础健康检查")
async def health_check(settings: AppSettings = Depends(get_settings)) -> Dict[str, Any]:
    return {
        "status": "healthy",
        "timestamp": datetime.now().isoformat(),
        "service": settings.app_name,
        "version": settings.version
    }


@router.get("/detailed", summary="详细健康检查")
async def detailed_health_check(
    settings: AppSettings = Depends(get_settings),
    service: GameService = Depends(get_game_service)
) -> Dict[str, Any]:
    """
    详细健康检查
    在 stalker 博弈上跑一次穷举作为冒烟测试，并返回当前上限配置
    """
    start_time = time.time()
    try:
        outcome = service.enumerate(gen_stalker(), StabilityConcept.NS)
        smoke = {"status": "ok", "ns_partitions": len(outcome.partitions), "total": outcome.total}
    except Exception as e:
        logger.error(f"冒烟测试失败: {e}")
        smoke = {"status": "failed", "error": str(e)}

    return {
        "status": "healthy" if smoke["status"] == "ok" else "degraded",
        "timestamp": datetime.now().isoformat(),
        "service": settings.app_name,
        "version": settings.version,
        "response_time": f"{time.time() - start_time:.3f}s",
        "smoke_test": smoke,
        "configuration": {
            "partition_cap": settings.oracle.partition_cap,
            "sat_cap": settings.oracle.sat_cap,
            "ir_prefilter": settings.oracle.ir_prefilter,
            "core_cap": settings.stability.core_cap,
            "default_max_steps": settings.dynamics.default_max_steps
        }
    }
