"""
工具模块
"""

from .exceptions import (
    BaseAppException,
    CapacityError,
    InvalidInputError,
    ParseError,
    PreconditionError,
    VerificationError,
)

__all__ = [
    "BaseAppException",
    "CapacityError",
    "InvalidInputError",
    "ParseError",
    "PreconditionError",
    "VerificationError",
]
