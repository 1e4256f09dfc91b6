"""
HTTP 服务主入口
uvicorn hedonic_games.main:app
"""

import logging

from hedonic_games.config.logging import setup_logging
from hedonic_games.core.application import create_application

setup_logging()
logger = logging.getLogger(__name__)

app = create_application()
