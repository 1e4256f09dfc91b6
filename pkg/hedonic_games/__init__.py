"""
基于玩家排序的享乐博弈
B / BB / W / WW 四种扩展下的稳定性检查、构造算法、偏离动力学与 SAT 归约
"""

__version__ = "1.0.0"
