"""
全局异常处理器
"""

import logging
from fastapi import Request, HTTPException, status
from fastapi.responses import JSONResponse
from fastapi.exceptions import RequestValidationError
from starlette.exceptions import HTTPException as StarletteHTTPException

from hedonic_games.utils.exceptions import BaseAppException

logger = logging.getLogger(__name__)

STATUS_CODE_MAP = {
    "INVALID_INPUT": status.HTTP_400_BAD_REQUEST,
    "PARSE_ERROR": status.HTTP_400_BAD_REQUEST,
    "PRECONDITION_FAILED": status.HTTP_422_UNPROCESSABLE_ENTITY,
    "CAPACITY_EXCEEDED": status.HTTP_413_REQUEST_ENTITY_TOO_LARGE,
    "VERIFICATION_FAILED": status.HTTP_500_INTERNAL_SERVER_ERROR,
}


def status_code_for(error_code: str) -> int:
    """根据错误码获取HTTP状态码"""
    return STATUS_CODE_MAP.get(error_code, status.HTTP_500_INTERNAL_SERVER_ERROR)


def _error_response(request: Request, status_code: int, code: str, message: str, details: dict) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={
            "success": False,
            "error": {
                "code": code,
                "message": message,
                "details": details
            },
            "path": str(request.url),
            "method": request.method
        }
    )


async def base_app_exception_handler(request: Request, exc: BaseAppException) -> JSONResponse:
    """
    处理应用自定义异常
    """
    logger.error(f"应用异常: {exc} - 错误码: {exc.error_code}")
    return _error_response(request, status_code_for(exc.error_code), exc.error_code, str(exc), exc.details)


async def http_exception_handler(request: Request, exc: HTTPException) -> JSONResponse:
    logger.error(f"HTTP异常: {exc.detail} - 状态码: {exc.status_code}")
    return _error_response(request, exc.status_code, f"HTTP_{exc.status_code}", str(exc.detail), {})


async def validation_exception_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    """
    处理请求体验证异常
    """
    logger.error(f"请求验证异常: {exc.errors()}")
    return _error_response(
        request,
        status.HTTP_422_UNPROCESSABLE_ENTITY,
        "VALIDATION_ERROR",
        "请求参数验证失败",
        {"validation_errors": [
            {"loc": list(error.get("loc", [])), "msg": error.get("msg", ""), "type": error.get("type", "")}
            for error in exc.errors()
        ]}
    )


async def general_exception_handler(request: Request, exc: Exception) -> JSONResponse:
    logger.error(f"未处理的异常: {str(exc)}", exc_info=True)
    return _error_response(request, status.HTTP_500_INTERNAL_SERVER_ERROR, "INTERNAL_SERVER_ERROR", "服务器内部错误", {})


def register_exception_handlers(app):
    """
    注册异常处理器
    """
    app.add_exception_handler(BaseAppException, base_app_exception_handler)
    app.add_exception_handler(HTTPException, http_exception_handler)
    app.add_exception_handler(StarletteHTTPException, http_exception_handler)
    app.add_exception_handler(RequestValidationError, validation_exception_handler)
    app.add_exception_handler(Exception, general_exception_handler)
