"""
API 模块：异常处理与健康检查
"""
