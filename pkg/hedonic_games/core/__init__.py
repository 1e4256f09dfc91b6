"""
核心领域模块：模型、扩展、稳定性、算法、穷举、动力学与归约
"""
