"""
日志配置模块
"""

import logging
import logging.config
from typing import Dict, Any, Optional
from pathlib import Path

from hedonic_games.config.settings import get_settings


def setup_logging(level: Optional[str] = None) -> None:
    """设置应用日志配置

    控制台输出走 stderr，stdout 只留给结果。
    """
    settings = get_settings()
    level = (level or settings.logging.level).upper()

    handlers: Dict[str, Any] = {
        "console": {
            "class": "logging.StreamHandler",
            "level": level,
            "formatter": "default",
            "stream": "ext://sys.stderr"
        }
    }
    if settings.logging.file_path:
        # 创建日志目录
        Path(settings.logging.file_path).parent.mkdir(parents=True, exist_ok=True)
        handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": level,
            "formatter": "detailed",
            "filename": settings.logging.file_path,
            "maxBytes": settings.logging.max_file_size,
            "backupCount": settings.logging.backup_count,
            "encoding": "utf-8"
        }

    logging_config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": settings.logging.format,
                "datefmt": "%Y-%m-%d %H:%M:%S"
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S"
            }
        },
        "handlers": handlers,
        "loggers": {
            "hedonic_games": {
                "level": level,
                "handlers": list(handlers),
                "propagate": False
            },
            "uvicorn": {
                "level": "INFO",
                "handlers": list(handlers),
                "propagate": False
            },
            "httpx": {
                "level": "WARNING",
                "handlers": ["console"],
                "propagate": False
            }
        },
        "root": {
            "level": "WARNING",
            "handlers": ["console"]
        }
    }

    logging.config.dictConfig(logging_config)

    logger = logging.getLogger("hedonic_games")
    logger.debug(f"日志系统初始化完成 - 级别: {level}")
    if settings.logging.file_path:
        logger.debug(f"日志文件: {settings.logging.file_path}")
