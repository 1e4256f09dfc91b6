"""
中间件模块
"""

from .error_handling import ErrorHandlingMiddleware

__all__ = ["ErrorHandlingMiddleware"]
