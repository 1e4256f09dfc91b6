"""
依赖注入容器
集中管理配置与业务服务实例
"""

import logging
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Type, TypeVar

from hedonic_games.config.settings import get_settings
from hedonic_games.services.game_service import GameService

logger = logging.getLogger(__name__)

T = TypeVar('T')


class Container:
    """依赖注入容器"""

    def __init__(self):
        self._factories: Dict[str, Callable[[], Any]] = {}
        self._singletons: Dict[str, Any] = {}
        self._initialized = False

    def register_singleton(self, service_type: Type[T], factory: Callable[[], T]) -> None:
        """注册单例服务"""
        key = service_type.__name__
        self._factories[key] = factory
        logger.debug(f"注册单例服务: {key}")

    def get(self, service_type: Type[T]) -> T:
        """获取服务实例，首次访问时创建"""
        key = service_type.__name__
        if key not in self._singletons:
            if key not in self._factories:
                raise KeyError(f"服务未注册: {key}")
            self._singletons[key] = self._factories[key]()
        return self._singletons[key]

    def initialize(self) -> None:
        if self._initialized:
            return
        self.register_singleton(type(get_settings()), get_settings)
        self.register_singleton(GameService, GameService)
        self._initialized = True
        logger.debug("依赖注入容器初始化完成")

    def clear(self) -> None:
        """清除已创建的实例，注册信息保留"""
        self._singletons.clear()
        logger.debug("清除所有服务实例")


_container: Optional[Container] = None


def get_container() -> Container:
    """获取全局容器实例"""
    global _container
    if _container is None:
        _container = Container()
        _container.initialize()
    return _container


@lru_cache()
def get_game_service() -> GameService:
    """获取博弈服务实例"""
    return get_container().get(GameService)
