"""
自定义异常类
"""

from typing import Optional, Any, Dict


class BaseAppException(Exception):
    """应用基础异常类"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)


class InvalidInputError(BaseAppException):
    """输入不合法：玩家编号越界、划分不合法、i 不在联盟中等"""

    def __init__(
        self,
        message: str,
        error_code: str = "INVALID_INPUT",
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message, error_code, details)


class ParseError(InvalidInputError):
    """文本格式解析失败，details 中带 line / column"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        error_code: str = "PARSE_ERROR",
        details: Optional[Dict[str, Any]] = None
    ):
        details = dict(details or {})
        details.setdefault("line", line)
        details.setdefault("column", column)
        self.line = line
        self.column = column
        super().__init__(message, error_code, details)

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class CapacityError(BaseAppException):
    """枚举规模超过配置上限"""

    def __init__(
        self,
        message: str,
        cap: Optional[int] = None,
        requested: Optional[int] = None,
        error_code: str = "CAPACITY_EXCEEDED",
        details: Optional[Dict[str, Any]] = None
    ):
        details = dict(details or {})
        details.setdefault("cap", cap)
        details.setdefault("requested", requested)
        self.cap = cap
        super().__init__(message, error_code, details)


class PreconditionError(BaseAppException):
    """算法或归约的前置条件不满足"""

    def __init__(
        self,
        message: str,
        error_code: str = "PRECONDITION_FAILED",
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message, error_code, details)


class VerificationError(BaseAppException):
    """构造性输出未通过对应的稳定性检查（内部错误）"""

    def __init__(
        self,
        message: str,
        error_code: str = "VERIFICATION_FAILED",
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message, error_code, details)
