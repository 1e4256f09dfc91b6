"""
请求与响应模式
"""
